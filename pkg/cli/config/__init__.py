# Toolkit configuration modules
