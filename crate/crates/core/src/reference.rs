//! Published values that the computations are checked against.

/// First eight parts of the ternary partition.
pub const TERNARY_PARTS: [[u64; 2]; 8] = [
    [1, 2],
    [3, 6],
    [4, 8],
    [5, 10],
    [7, 14],
    [9, 18],
    [11, 22],
    [12, 24],
];

/// First twenty ternary primitives.
pub const TERNARY_PRIMITIVES: [u64; 20] = [
    1, 3, 4, 5, 7, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21, 23, 25, 27, 28, 29,
];

/// First sixty parts of the length-3 partition as `(leader, size)`.
pub const LENGTH3_PARTS: [(u64, usize); 60] = [
    (1, 3),
    (4, 3),
    (5, 3),
    (6, 1),
    (7, 3),
    (9, 3),
    (11, 3),
    (13, 3),
    (16, 3),
    (17, 3),
    (19, 3),
    (20, 3),
    (23, 3),
    (24, 1),
    (25, 3),
    (28, 3),
    (29, 3),
    (30, 1),
    (31, 3),
    (35, 3),
    (36, 3),
    (37, 3),
    (41, 3),
    (42, 1),
    (43, 3),
    (44, 3),
    (45, 3),
    (47, 3),
    (49, 3),
    (52, 3),
    (53, 3),
    (54, 1),
    (55, 3),
    (59, 3),
    (61, 3),
    (63, 3),
    (64, 3),
    (65, 3),
    (66, 1),
    (67, 3),
    (68, 3),
    (71, 3),
    (73, 3),
    (76, 3),
    (77, 3),
    (78, 1),
    (79, 3),
    (80, 3),
    (81, 3),
    (83, 3),
    (85, 3),
    (89, 3),
    (91, 3),
    (92, 3),
    (95, 3),
    (96, 1),
    (97, 3),
    (99, 3),
    (100, 3),
    (102, 1),
];

/// Length 3: first rank-3 primitives.
pub const LENGTH3_RANK3: [u64; 60] = [
    1, 4, 5, 7, 9, 11, 13, 16, 17, 19, 20, 23, 25, 28, 29, 31, 35, 36, 37, 41, 43, 44, 45, 47, 49,
    52, 53, 55, 59, 61, 63, 64, 65, 67, 68, 71, 73, 76, 77, 79, 80, 81, 83, 85, 89, 91, 92, 95, 97,
    99, 100, 101, 103, 107, 109, 112, 113, 115, 116, 117,
];

/// Length 3: first rank-1 primitives.
pub const LENGTH3_RANK1: [u64; 30] = [
    6, 24, 30, 42, 54, 66, 78, 96, 102, 114, 120, 138, 150, 168, 174, 186, 210, 216, 222, 246, 258,
    264, 270, 282, 294, 312, 318, 330, 354, 366,
];

/// Length 4: first fifteen nonzero columns of the column sieve, row by row.
pub const LENGTH4_MATRIX: [[u64; 15]; 4] = [
    [1, 5, 6, 7, 8, 9, 11, 13, 17, 19, 23, 25, 27, 29, 30],
    [2, 10, 12, 14, 16, 0, 22, 26, 34, 38, 46, 50, 54, 58, 60],
    [3, 15, 18, 21, 0, 0, 33, 39, 51, 57, 69, 75, 81, 87, 90],
    [4, 20, 24, 28, 0, 0, 44, 52, 68, 76, 92, 100, 108, 116, 120],
];

/// Length 4: first rank-4 primitives.
pub const LENGTH4_RANK4: [u64; 240] = [
    1, 5, 6, 7, 11, 13, 17, 19, 23, 25, 27, 29, 30, 31, 32, 35, 37, 41, 42, 43, 47, 49, 53, 55, 59,
    61, 65, 66, 67, 71, 73, 77, 78, 79, 83, 85, 89, 91, 95, 97, 101, 102, 103, 107, 109, 113, 114,
    115, 119, 121, 125, 127, 131, 133, 135, 137, 138, 139, 143, 144, 145, 149, 150, 151, 155, 157,
    160, 161, 162, 163, 167, 169, 173, 174, 175, 179, 181, 185, 186, 187, 189, 191, 193, 197, 199,
    203, 205, 209, 210, 211, 215, 217, 221, 222, 223, 224, 227, 229, 233, 235, 239, 241, 245, 246,
    247, 251, 253, 256, 257, 258, 259, 263, 265, 269, 271, 275, 277, 281, 282, 283, 287, 289, 293,
    294, 295, 297, 299, 301, 305, 307, 311, 313, 317, 318, 319, 323, 325, 329, 330, 331, 335, 337,
    341, 343, 347, 349, 351, 352, 353, 354, 355, 359, 361, 365, 366, 367, 371, 373, 377, 379, 383,
    385, 389, 390, 391, 395, 397, 401, 402, 403, 407, 409, 413, 415, 416, 419, 421, 425, 426, 427,
    431, 433, 437, 438, 439, 443, 445, 449, 451, 455, 457, 459, 461, 462, 463, 467, 469, 473, 474,
    475, 479, 481, 485, 487, 491, 493, 497, 498, 499, 503, 505, 509, 510, 511, 513, 515, 517, 521,
    523, 527, 529, 533, 534, 535, 539, 541, 544, 545, 546, 547, 551, 553, 557, 559, 563, 565, 569,
    570, 571, 575,
];

/// Length 4: first rank-1 primitives.
pub const LENGTH4_RANK1: [u64; 15] = [
    9, 45, 48, 63, 99, 117, 153, 171, 207, 216, 225, 240, 243, 261, 279,
];

/// Length 4: first rank-2 primitives.
pub const LENGTH4_RANK2: [u64; 30] = [
    8, 36, 40, 56, 88, 104, 136, 152, 180, 184, 192, 200, 232, 248, 252, 280, 296, 328, 344, 376,
    392, 396, 424, 440, 468, 472, 488, 520, 536, 568,
];

/// First primitive of each rank for lengths 2 to 16, indexed
/// `[d - 2][r - 1]`; 0 where none was published or `r > d`.
pub const FIRST_OF_RANK: [[u64; 16]; 15] = [
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [6, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [9, 8, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [9, 8, 40, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [12, 80, 10, 72, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [12, 80, 10, 35, 504, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [15, 12, 105, 14, 0, 96, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [15, 16, 105, 12, 896, 729, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [18, 16, 15, 162, 14, 63, 567, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [18, 16, 15, 162, 14, 63, 567, 616, 99, 0, 1, 0, 0, 0, 0, 0],
    [21, 20, 125, 18, 0, 16, 144, 99, 0, 0, 0, 1, 0, 0, 0, 0],
    [21, 20, 125, 18, 0, 16, 144, 99, 0, 143, 0, 0, 1, 0, 0, 0],
    [24, 20, 125, 18, 0, 352, 22, 99, 0, 143, 0, 0, 0, 1, 0, 0],
    [24, 28, 20, 168, 21, 180, 18, 99, 0, 143, 0, 0, 0, 0, 1, 0],
    [27, 24, 25, 32, 21, 112, 0, 20, 880, 143, 0, 195, 0, 0, 0, 1],
];

/// Final sifting set of the length-4 sifting run to 4000.
pub const LENGTH4_SIFT_SET: [u64; 13] = [2, 3, 4, 8, 9, 16, 36, 72, 192, 384, 768, 1024, 2048];

/// Survivors of that run that are not rank-4 primitives.
pub const LENGTH4_SPORADIC: [u64; 5] = [256, 1280, 1792, 2816, 3328];
