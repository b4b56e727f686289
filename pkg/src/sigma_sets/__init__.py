# Sigma-set package
