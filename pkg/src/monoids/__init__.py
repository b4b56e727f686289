# Monoids package
