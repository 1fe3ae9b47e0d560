//! Two-dimensional pre-anti-flexible algebras that are not dendriform.
//!
//! These are all such algebras whose structure constants lie in {−1, 0, 1},
//! found by exhaustive enumeration. Each code packs the sixteen constants
//! in base 3: digit `i` (least significant first) minus one is entry `i` of
//! the flattened `[≺, ≻]` pair, each tensor in `[i][j][k]` order.

use antiflex_linear::{int, Tensor3};

use crate::algebra::PreAlgebra;

pub const NON_DENDRIFORM_CODES: [u64; 96] = [
    1859314, 2390746, 2391475, 2625760, 5381680, 7173715, 7175173, 7744800, 7745720, 8923648, 11426710, 11836864,
    11957413, 11958142, 16143360, 16206034, 16206763, 16719982, 16721434, 16737466, 16741858, 16759342, 16760806,
    17273290, 17274019, 17324352, 18503200, 18507400, 19424480, 20448176, 20989003, 20990461, 21319966, 21326526,
    21326529, 21346209, 21346215, 21359338, 21365895, 21365898, 21496870, 21496873, 21503430, 21503918, 21510478,
    21510481, 21516553, 21516559, 21530161, 21530167, 21536239, 21536242, 21542802, 21543290, 21549847, 21549850,
    21680822, 21680825, 21687382, 21700505, 21700511, 21720191, 21720194, 21726754, 22056259, 22057717, 22598544,
    23622240, 24539320, 24543520, 25722368, 25772701, 25773430, 26285914, 26287378, 26304862, 26309254, 26325286,
    26326738, 26839957, 26840686, 26903360, 31088578, 31089307, 31209856, 31620010, 34123072, 35301000, 35301920,
    35871547, 35873005, 37665040, 40420960, 40655245, 40655974, 41187406,
];

pub fn decode_pre_algebra(mut code: u64) -> PreAlgebra {
    let mut digits = [0i64; 16];
    for d in digits.iter_mut() {
        *d = (code % 3) as i64 - 1;
        code /= 3;
    }
    let t = |off: usize| Tensor3::from_fn([2, 2, 2], |i, j, k| int(digits[off + 4 * i + 2 * j + k]));
    PreAlgebra::new(t(0), t(8)).expect("dimension 2")
}

pub fn non_dendriform_pre_algebras() -> Vec<PreAlgebra> {
    NON_DENDRIFORM_CODES.iter().map(|&c| decode_pre_algebra(c)).collect()
}

/// A small deterministic selection, spread across the list, for tests whose
/// per-subject cost is high.
pub fn non_dendriform_selection(count: usize) -> Vec<PreAlgebra> {
    let step = (NON_DENDRIFORM_CODES.len() / count.max(1)).max(1);
    NON_DENDRIFORM_CODES.iter().step_by(step).take(count).map(|&c| decode_pre_algebra(c)).collect()
}
