"""Known implicit relations of profile curves and evolutes (K = 0).

Each table row is (coefficient, power of c, power of J, power of r, power of h);
evolute tables use r, h for the two evolute coordinates.
"""

RelationTable = tuple[tuple[int, int, int, int, int], ...]

# m = 2 profile, general c
SECANT_SQUARE_PROFILE: RelationTable = (
    (1, 6, 0, 0, 0),
    (-27, 4, 0, 0, 2),
    (243, 2, 0, 0, 4),
    (-729, 0, 0, 0, 6),
    (135, 4, 2, 0, 0),
    (1944, 2, 2, 0, 2),
    (-8748, 0, 2, 0, 4),
    (3888, 2, 4, 0, 0),
    (-34992, 0, 4, 0, 2),
    (-46656, 0, 6, 0, 0),
    (-54, 4, 1, 1, 0),
    (-486, 2, 1, 1, 2),
    (8748, 0, 1, 1, 4),
    (-1944, 2, 3, 1, 0),
    (69984, 0, 3, 1, 2),
    (139968, 0, 5, 1, 0),
    (-9, 4, 0, 2, 0),
    (162, 2, 0, 2, 2),
    (-729, 0, 0, 2, 4),
    (-1296, 2, 2, 2, 0),
    (-40824, 0, 2, 2, 2),
    (-151632, 0, 4, 2, 0),
    (648, 2, 1, 3, 0),
    (5832, 0, 1, 3, 2),
    (69984, 0, 3, 3, 0),
    (-11664, 0, 2, 4, 0),
)

# m = 2 profile, c = 0: the parabola 4Jr − h² − 4J²
SECANT_SQUARE_PARABOLA: RelationTable = (
    (4, 0, 1, 1, 0),
    (-1, 0, 0, 0, 2),
    (-4, 0, 2, 0, 0),
)

# m = 2 evolute (3J sec²θ, 2J tan³θ)
SECANT_SQUARE_EVOLUTE: RelationTable = (
    (27, 0, 1, 0, 2),
    (108, 0, 3, 0, 0),
    (-108, 0, 2, 1, 0),
    (36, 0, 1, 2, 0),
    (-4, 0, 0, 3, 0),
)

# m = −3 profile, general c
COSINE_CUBE_PROFILE: RelationTable = (
    (1, 2, 0, 0, 4),
    (-4, 0, 0, 0, 6),
    (4, 3, 1, 0, 2),
    (-24, 1, 1, 0, 4),
    (4, 4, 2, 0, 0),
    (-56, 2, 2, 0, 2),
    (48, 0, 2, 0, 4),
    (-48, 3, 3, 0, 0),
    (192, 1, 3, 0, 2),
    (208, 2, 4, 0, 0),
    (-192, 0, 4, 0, 2),
    (-384, 1, 5, 0, 0),
    (256, 0, 6, 0, 0),
    (2, 2, 0, 2, 2),
    (-12, 0, 0, 2, 4),
    (-4, 3, 1, 2, 0),
    (-12, 1, 1, 2, 2),
    (16, 2, 2, 2, 0),
    (96, 0, 2, 2, 2),
    (48, 1, 3, 2, 0),
    (-192, 0, 4, 2, 0),
    (1, 2, 0, 4, 0),
    (-12, 0, 0, 4, 2),
    (12, 1, 1, 4, 0),
    (-60, 0, 2, 4, 0),
    (-4, 0, 0, 6, 0),
)

# m = −3 profile, c = 0
COSINE_CUBE_REDUCED: RelationTable = (
    (1, 0, 0, 0, 6),
    (-12, 0, 2, 0, 4),
    (48, 0, 4, 0, 2),
    (-64, 0, 6, 0, 0),
    (3, 0, 0, 2, 4),
    (-24, 0, 2, 2, 2),
    (48, 0, 4, 2, 0),
    (3, 0, 0, 4, 2),
    (15, 0, 2, 4, 0),
    (1, 0, 0, 6, 0),
)

# m = −3 evolute (−2J cos³θ, 2J sin³θ)
COSINE_CUBE_EVOLUTE: RelationTable = (
    (1, 0, 0, 0, 6),
    (-12, 0, 2, 0, 4),
    (48, 0, 4, 0, 2),
    (-64, 0, 6, 0, 0),
    (3, 0, 0, 2, 4),
    (84, 0, 2, 2, 2),
    (48, 0, 4, 2, 0),
    (3, 0, 0, 4, 2),
    (-12, 0, 2, 4, 0),
    (1, 0, 0, 6, 0),
)

PROFILE_RELATIONS: dict[int, RelationTable] = {
    2: SECANT_SQUARE_PROFILE,
    -3: COSINE_CUBE_PROFILE,
}
REDUCED_PROFILE_RELATIONS: dict[int, RelationTable] = {
    2: SECANT_SQUARE_PARABOLA,
    -3: COSINE_CUBE_REDUCED,
}
EVOLUTE_RELATIONS: dict[int, RelationTable] = {
    2: SECANT_SQUARE_EVOLUTE,
    -3: COSINE_CUBE_EVOLUTE,
}
