# Source package for the regular-language witness toolkit
