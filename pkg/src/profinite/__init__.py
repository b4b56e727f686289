# Profinite approximation package
