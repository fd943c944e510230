"""Cayley tables and functions used across the suite."""

# five elements, 0..4
FIVE = [
    [0, 1, 2, 3, 4],
    [0, 0, 2, 3, 4],
    [0, 1, 0, 3, 3],
    [0, 0, 2, 0, 2],
    [0, 0, 0, 0, 0],
]

# elements 0, a, b, c, d
ABCD = [
    [0, 1, 2, 3, 4],
    [0, 0, 2, 2, 1],
    [0, 1, 0, 1, 4],
    [0, 0, 0, 0, 1],
    [0, 0, 2, 2, 0],
]
ABCD_NAMES = ["0", "a", "b", "c", "d"]

# elements 0, a, b, c with 0 < a < b and 0 < c
FOUR = [
    [0, 1, 2, 3],
    [0, 0, 1, 3],
    [0, 0, 0, 3],
    [0, 1, 2, 0],
]
FOUR_NAMES = ["0", "a", "b", "c"]
FOUR_CODE = ["1000", "1100", "1110", "1001"]

# gcd table on a_1..a_9, entries are k for a_k
GCD9 = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9],
    [1, 1, 3, 2, 5, 3, 7, 4, 9],
    [1, 2, 1, 4, 5, 2, 7, 8, 3],
    [1, 1, 3, 1, 5, 3, 7, 2, 9],
    [1, 2, 3, 4, 1, 6, 7, 8, 9],
    [1, 1, 1, 2, 5, 1, 7, 4, 3],
    [1, 2, 3, 4, 5, 6, 1, 8, 9],
    [1, 1, 3, 1, 5, 3, 7, 1, 9],
    [1, 2, 1, 4, 5, 2, 7, 8, 1],
]

GCD9_CODE = [
    "100000000", "110000000", "101000000", "110100000", "100010000",
    "111001000", "100000100", "110100010", "101000001",
]

# function on labels a..e into the gcd algebra: a_4, a_6, a_7, a_1, a_2
GCD_FUNCTION = {"a": 4, "b": 6, "c": 7, "d": 1, "e": 2}

# cut table: rows a_1..a_9, columns a..e
GCD_CUTS = [
    "00010", "00011", "00010", "10011", "00010",
    "01011", "00110", "10011", "00010",
]
