RATE = 0.05
VOL = 0.3
MATURITIES = (0.5, 1.0, 1.5)

# (S0, K, B), K >= B
TABLE1_CONTRACTS = [
    (57, 63, 60),
    (58, 63, 60),
    (59, 63, 60),
    (60, 63, 63),
    (60, 64, 63),
    (60, 65, 63),
    (70, 75, 72),
    (70, 75, 73),
    (70, 75, 75),
]

# (S0, K, B), K < B
TABLE2_CONTRACTS = [
    (55, 56, 58),
    (56, 56, 58),
    (57, 56, 58),
    (60, 61, 64),
    (60, 62, 64),
    (60, 63, 64),
    (79, 81, 82),
    (79, 81, 85),
    (79, 81, 87),
]

TABLE3_MATURITIES = (2.0, 3.0, 4.0, 5.0, 6.0)

# (S0, K, B) of the two long maturity sets, one per regime
TABLE3_SETS = [
    (75, 80, 79),
    (55, 56, 58),
]
