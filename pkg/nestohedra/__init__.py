# Building sets and nested set complexes
