//! Published reference data: the worked 8x8 example over GF(16) with
//! x^4 + x^3 + 1, its three Latin-rectangle factors, and the full table of
//! (n, k, rot) triplets for even n in 8..=256.

#![allow(dead_code)]

pub const FIELD_M: u32 = 4;
pub const FIELD_POLY: u32 = 0x19;

pub const P: [[u8; 8]; 8] = [
    [0, 1, 0, 1, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 1, 1, 1],
    [0, 0, 1, 0, 0, 1, 1, 0],
    [0, 0, 1, 0, 0, 0, 1, 1],
    [1, 1, 0, 0, 1, 0, 0, 0],
    [1, 0, 0, 1, 1, 0, 0, 0],
    [1, 1, 0, 1, 0, 0, 0, 0],
];

pub const P_7_13: [[u32; 8]; 8] = [
    [7, 13, 7, 13, 13, 7, 7, 7],
    [7, 7, 13, 7, 7, 13, 7, 13],
    [7, 7, 7, 7, 7, 13, 13, 13],
    [7, 7, 13, 7, 7, 13, 13, 7],
    [7, 7, 13, 7, 7, 7, 13, 13],
    [13, 13, 7, 7, 13, 7, 7, 7],
    [13, 7, 7, 13, 13, 7, 7, 7],
    [13, 13, 7, 13, 7, 7, 7, 7],
];

pub const P_4_15: [[u32; 8]; 8] = [
    [4, 4, 4, 4, 4, 15, 15, 15],
    [15, 4, 4, 4, 4, 15, 4, 15],
    [4, 15, 4, 15, 15, 4, 4, 4],
    [15, 4, 4, 4, 4, 4, 15, 15],
    [15, 4, 4, 4, 4, 15, 15, 4],
    [4, 15, 15, 15, 4, 4, 4, 4],
    [4, 4, 15, 15, 15, 4, 4, 4],
    [4, 15, 15, 4, 15, 4, 4, 4],
];

pub const K: usize = 3;
pub const ROT: usize = 2;

/// First rows of L1, L2, L3.
pub const R0S: [[usize; 8]; 3] = [
    [6, 5, 4, 3, 1, 7, 0, 2],
    [3, 6, 1, 7, 4, 2, 0, 5],
    [4, 2, 5, 6, 3, 1, 0, 7],
];

pub const L: [[[usize; 8]; 3]; 3] = [
    [
        [6, 5, 4, 3, 1, 7, 0, 2],
        [4, 3, 1, 7, 0, 2, 6, 5],
        [1, 7, 0, 2, 6, 5, 4, 3],
    ],
    [
        [3, 6, 1, 7, 4, 2, 0, 5],
        [1, 7, 4, 2, 0, 5, 3, 6],
        [4, 2, 0, 5, 3, 6, 1, 7],
    ],
    [
        [4, 2, 5, 6, 3, 1, 0, 7],
        [5, 6, 3, 1, 0, 7, 4, 2],
        [3, 1, 0, 7, 4, 2, 5, 6],
    ],
];

pub const M: [[[u8; 8]; 8]; 3] = [
    [
        [0, 0, 1, 0, 1, 0, 1, 0],
        [1, 0, 1, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 1, 0, 1],
        [0, 1, 0, 1, 0, 0, 0, 1],
        [1, 0, 1, 0, 0, 0, 1, 0],
        [0, 1, 0, 0, 0, 1, 0, 1],
        [1, 0, 0, 0, 1, 0, 1, 0],
        [0, 1, 0, 1, 0, 1, 0, 0],
    ],
    [
        [0, 0, 1, 0, 1, 0, 1, 0],
        [1, 0, 1, 0, 0, 0, 1, 0],
        [0, 1, 0, 1, 0, 1, 0, 0],
        [1, 0, 0, 0, 1, 0, 1, 0],
        [1, 0, 1, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 1, 0, 1],
        [0, 1, 0, 0, 0, 1, 0, 1],
        [0, 1, 0, 1, 0, 0, 0, 1],
    ],
    [
        [0, 0, 1, 0, 1, 0, 1, 0],
        [0, 1, 0, 1, 0, 1, 0, 0],
        [0, 1, 0, 0, 0, 1, 0, 1],
        [1, 0, 1, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, 1, 0, 1, 0],
        [1, 0, 1, 0, 0, 0, 1, 0],
        [0, 1, 0, 1, 0, 0, 0, 1],
        [0, 0, 0, 1, 0, 1, 0, 1],
    ],
];

pub const TABLE: [(usize, usize, usize); 96] = [
    (8, 3, 2),
    (12, 3, 3),
    (16, 3, 4),
    (18, 5, 3),
    (20, 3, 5),
    (24, 3, 6),
    (28, 3, 7),
    (30, 5, 5),
    (32, 3, 8),
    (36, 3, 9),
    (40, 3, 10),
    (42, 5, 7),
    (44, 3, 11),
    (48, 3, 12),
    (50, 9, 5),
    (52, 3, 13),
    (54, 5, 9),
    (56, 3, 14),
    (60, 3, 15),
    (64, 3, 16),
    (66, 5, 11),
    (68, 3, 17),
    (70, 9, 7),
    (72, 3, 18),
    (76, 3, 19),
    (78, 5, 13),
    (80, 3, 20),
    (84, 3, 21),
    (88, 3, 22),
    (90, 5, 15),
    (92, 3, 23),
    (96, 3, 24),
    (98, 13, 7),
    (100, 3, 25),
    (102, 5, 17),
    (104, 3, 26),
    (108, 3, 27),
    (110, 9, 11),
    (112, 3, 28),
    (114, 5, 19),
    (116, 3, 29),
    (120, 3, 30),
    (124, 3, 31),
    (126, 5, 21),
    (128, 3, 32),
    (130, 9, 13),
    (132, 3, 33),
    (136, 3, 34),
    (138, 5, 23),
    (140, 3, 35),
    (144, 3, 36),
    (148, 3, 37),
    (150, 5, 25),
    (152, 3, 38),
    (154, 13, 11),
    (156, 3, 39),
    (160, 3, 40),
    (162, 5, 27),
    (164, 3, 41),
    (168, 3, 42),
    (170, 9, 17),
    (172, 3, 43),
    (174, 5, 29),
    (176, 3, 44),
    (180, 3, 45),
    (182, 13, 13),
    (184, 3, 46),
    (186, 5, 31),
    (188, 3, 47),
    (190, 9, 19),
    (192, 3, 48),
    (196, 3, 49),
    (198, 5, 33),
    (200, 3, 50),
    (204, 3, 51),
    (208, 3, 52),
    (210, 5, 35),
    (212, 3, 53),
    (216, 3, 54),
    (220, 3, 55),
    (222, 5, 37),
    (224, 3, 56),
    (228, 3, 57),
    (230, 9, 23),
    (232, 3, 58),
    (234, 5, 39),
    (236, 3, 59),
    (238, 13, 17),
    (240, 3, 60),
    (242, 21, 11),
    (244, 3, 61),
    (246, 5, 41),
    (248, 3, 62),
    (250, 9, 25),
    (252, 3, 63),
    (256, 3, 64),
];
