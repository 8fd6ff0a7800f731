# Massey products in the Koszul algebra
