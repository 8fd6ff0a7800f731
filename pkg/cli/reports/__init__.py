# Toolkit report modules
