# Bridge package
