h 7
e 0 1 2
e 0 3 4
e 0 5 6
e 1 3 5
e 1 4 6
e 2 3 6
e 2 4 5
