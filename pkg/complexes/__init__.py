# Simplicial complex modules
