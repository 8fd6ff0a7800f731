# Differential ring of simple polytopes
