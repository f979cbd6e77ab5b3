"""Golden value vectors for n = 14: the 28 maximum-immunity functions with
v(7) = 1, grouped by catalog shape, plus their exact Hamming weights."""

ITEM1_V7 = (
    "000000011111111",
    "000100011110111",
    "010001011011101",
    "101010110101010",
    "010101011010101",
    "101110110100010",
    "111011110001000",
    "111111110000000",
)

ITEM2_V7 = (
    "000000011110111",
    "010001011010101",
    "101010110100010",
    "111011110000000",
)

ITEM3_I0_V7 = (
    "000000011111110",
    "010001011011100",
    "001010110101010",
    "011011110001000",
    "000100011110110",
    "010101011010100",
    "001110110100010",
    "011111110000000",
)

ITEM3_I1_V7 = (
    "000000011111101",
    "000001011011101",
    "101010110101000",
    "101011110001000",
    "000100011110101",
    "000101011010101",
    "101110110100000",
    "101111110000000",
)

ALL_V7 = ITEM1_V7 + ITEM2_V7 + ITEM3_I0_V7 + ITEM3_I1_V7

# (weight of the listed functions, weight of their complements)
WEIGHTS = {
    "item1": (9908, 6476),
    "item2": (9544, 6840),
    "item3_i0": (9907, 6477),
    "item3_i1": (9894, 6490),
}
