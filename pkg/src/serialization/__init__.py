# Serialization package
