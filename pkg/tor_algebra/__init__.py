# Koszul algebra R(K) and its cohomology
