# all 3-subsets of {0,...,4}: delta 3, Delta 6, k 4
h 5
e 0 1 2
e 0 1 3
e 0 1 4
e 0 2 3
e 0 2 4
e 0 3 4
e 1 2 3
e 1 2 4
e 1 3 4
e 2 3 4
