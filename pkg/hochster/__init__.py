# Hochster decomposition modules
