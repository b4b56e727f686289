# Language core package
