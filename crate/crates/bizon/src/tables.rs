//! Reference Hilbert functions of the bizonotopal algebras of complete
//! graphs, used as exact expected values by the verification suites.

/// External algebra (`r = 1`) Hilbert coefficients of `K_n`, `2 <= n <= 9`.
pub fn external_complete(n: usize) -> Option<&'static [u64]> {
    Some(match n {
        2 => &[1, 2],
        3 => &[1, 3, 6, 7],
        4 => &[1, 4, 10, 20, 31, 40, 38],
        5 => &[1, 5, 15, 35, 70, 121, 185, 255, 310, 335, 291],
        6 => &[
            1, 6, 21, 56, 126, 252, 456, 756, 1161, 1666, 2232, 2796, 3281, 3546, 3516, 2932,
        ],
        7 => &[
            1, 7, 28, 84, 210, 462, 924, 1709, 2954, 4809, 7420, 10906, 15309, 20559, 26454,
            32655, 38591, 43589, 46984, 47649, 45150, 36961,
        ],
        8 => &[
            1, 8, 36, 120, 330, 792, 1716, 3432, 6427, 11376, 19160, 30864, 47748, 71184,
            102524, 142920, 193117, 253240, 322596, 399344, 480390, 561472, 637400, 701296,
            746089, 765640, 748532, 691720, 561948,
        ],
        9 => &[
            1, 9, 45, 165, 495, 1287, 3003, 6435, 12870, 24301, 43677, 75177, 124485, 199035,
            308187, 463287, 677520, 965493, 1342513, 1823553, 2421927, 3147723, 4005819,
            4993839, 6100350, 7303545, 8570601, 9855829, 11101599, 12241305, 13203705,
            13902291, 14254524, 14195199, 13575951, 12369033, 10026505,
        ],
        _ => return None,
    })
}

/// Central algebra (`r = 0`) Hilbert coefficients of `K_n`, `2 <= n <= 9`.
pub fn central_complete(n: usize) -> Option<&'static [u64]> {
    Some(match n {
        2 => &[1],
        3 => &[1, 3, 3],
        4 => &[1, 4, 10, 16, 19, 16],
        5 => &[1, 5, 15, 35, 65, 101, 135, 155, 155, 125],
        6 => &[1, 6, 21, 56, 126, 246, 426, 666, 951, 1246, 1506, 1686, 1731, 1626, 1296],
        7 => &[
            1, 7, 28, 84, 210, 462, 917, 1667, 2807, 4417, 6538, 9142, 12117, 15267, 18327,
            20958, 22827, 23667, 23107, 21112, 16807,
        ],
        8 => &[
            1, 8, 36, 120, 330, 792, 1716, 3424, 6371, 11152, 18488, 29184, 44052, 63792,
            88852, 119288, 154645, 193880, 235292, 276592, 315078, 347880, 371820, 384112,
            382817, 364232, 328392, 262144,
        ],
        9 => &[
            1, 9, 45, 165, 495, 1287, 3003, 6435, 12861, 24229, 43353, 74097, 121515, 191907,
            292743, 432399, 619677, 863109, 1170073, 1545777, 1992195, 2506983, 3082599,
            3705795, 4357593, 5013801, 5645313, 6219649, 6703245, 7064073, 7267815, 7285959,
            7100739, 6660495, 5966613, 4782969,
        ],
        _ => return None,
    })
}

/// Internal algebra (`r = -1`) Hilbert coefficients of `K_n`, `3 <= n <= 9`.
pub fn internal_complete(n: usize) -> Option<&'static [u64]> {
    Some(match n {
        3 => &[1],
        4 => &[1, 4, 6, 4, 1],
        5 => &[1, 5, 15, 30, 45, 51, 45, 30, 15],
        6 => &[1, 6, 21, 56, 120, 216, 336, 456, 546, 580, 546, 456, 336, 216],
        7 => &[
            1, 7, 28, 84, 210, 455, 875, 1520, 2415, 3535, 4795, 6055, 7140, 7875, 8135, 7875,
            7140, 6055, 4795, 3430,
        ],
        8 => &[
            1, 8, 36, 120, 330, 792, 1708, 3368, 6147, 10480, 16808, 25488, 36688, 50288,
            65808, 82384, 98813, 113688, 125588, 133288, 135954, 133288, 125588, 113688, 98533,
            81488, 61440,
        ],
        9 => &[
            1, 9, 45, 165, 495, 1287, 3003, 6426, 12789, 23905, 42273, 71127, 114387, 176463,
            261891, 374808, 518301, 693693, 899857, 1132677, 1384803, 1645791, 1902663,
            2140866, 2345553, 2503053, 2602341, 2636263, 2602341, 2502423, 2342907, 2134062,
            1881243, 1596861, 1240029,
        ],
        _ => return None,
    })
}

/// Reference table for a given `r` in {1, 0, -1}, when available.
pub fn complete_reference(n: usize, r: i64) -> Option<&'static [u64]> {
    match r {
        1 => external_complete(n),
        0 => central_complete(n),
        -1 => internal_complete(n),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_sum_correctly() {
        let dims_ext = [3u64, 17, 144, 1623, 22804, 383415, 7501422, 167341283];
        for (n, &d) in (2..=9).zip(&dims_ext) {
            assert_eq!(external_complete(n).unwrap().iter().sum::<u64>(), d);
        }
        // the K8/K9 dimensions are the row sums; the top coefficients
        // n^(n-2) anchor the rows themselves
        let dims_cen = [1u64, 7, 66, 792, 11590, 200469, 4004490, 90759016];
        for (n, &d) in (2..=9).zip(&dims_cen) {
            assert_eq!(central_complete(n).unwrap().iter().sum::<u64>(), d);
        }
        let dims_int = [1u64, 16, 237, 3892, 72425, 1521810, 35794801];
        for (n, &d) in (3..=9).zip(&dims_int) {
            assert_eq!(internal_complete(n).unwrap().iter().sum::<u64>(), d);
        }
    }

    #[test]
    fn out_of_range_is_none() {
        assert!(external_complete(1).is_none());
        assert!(external_complete(10).is_none());
        assert!(central_complete(10).is_none());
        assert!(internal_complete(2).is_none());
        assert!(complete_reference(5, 2).is_none());
    }

    #[test]
    fn top_coefficients_are_spanning_structure_counts() {
        // leading h^1 coefficient counts spanning forests, leading h^0
        // coefficient counts spanning trees (n^{n-2})
        assert_eq!(*external_complete(4).unwrap().last().unwrap(), 38);
        assert_eq!(*central_complete(7).unwrap().last().unwrap(), 7u64.pow(5));
        assert_eq!(*central_complete(9).unwrap().last().unwrap(), 9u64.pow(7));
    }
}
