mod common;

use std::collections::BTreeMap;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scforge::census::{census, PatternId};
use scforge::protograph::{build_sc_protograph, overlap_params, PartitionMatrix};
use scforge::{Census, CodeParams};

use common::{brute_force_candidate_census, closed_walks, random_partition, DIMS, ZETA};

const GUARD: usize = 200;

fn closed_form(p: &PartitionMatrix, params: &CodeParams) -> Census {
    census(&overlap_params(p, params).unwrap(), params).unwrap()
}

#[test]
fn two_by_two_all_ones() {
    let h = scforge::matrix::BinaryMatrix::from_dense(&[vec![1, 1], vec![1, 1]]);
    let o = brute_force_candidate_census(&h, GUARD);
    assert_eq!(o.walks, [1, 0, 0, 0, 0, 0, 0, 0, 0]);
    assert_eq!(o.weighted, Ratio::new(1, 2));
}

#[test]
fn k7_reference_oracle() {
    let params = CodeParams::new(3, 7, 13, 1, 10).unwrap();
    let rows = vec![vec![0, 0, 0, 1, 1, 1, 1], vec![1, 1, 1, 0, 0, 0, 1], vec![0, 1, 1, 0, 1, 0, 0]];
    let p = PartitionMatrix::from_rows(1, &rows).unwrap();
    let o = brute_force_candidate_census(&build_sc_protograph(&p, params.l).matrix, 400);
    assert_eq!(o.weighted, Ratio::new(10339, 2));
}

#[test]
fn random_instances_match_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    while checked < 120 {
        let gamma = rng.gen_range(3..=4);
        let kappa = rng.gen_range(gamma..=6);
        let m = rng.gen_range(0..=2);
        let l = 2 * m + 1 + rng.gen_range(0..=1);
        let params = CodeParams::protograph(gamma, kappa, m, l).unwrap();
        let p = random_partition(&params, &mut rng);
        let o = brute_force_candidate_census(&build_sc_protograph(&p, l).matrix, GUARD);
        let c = closed_form(&p, &params);
        for (i, pid) in PatternId::ALL.iter().enumerate() {
            assert_eq!(*c.total(*pid), Ratio::from_integer(o.counts[i]), "{pid} on {params:?} {:?}", p.rows());
        }
        assert_eq!(c.f_sum, o.weighted);
        checked += 1;
    }
}

/// Oracle instances bucketed by (first replica, span) against `F^k_{Pℓ,1}`.
#[test]
fn per_span_counts_match_leftmost_bucket() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let gamma = rng.gen_range(3..=4);
        let kappa = rng.gen_range(gamma..=5);
        let m = rng.gen_range(1..=2);
        let l = 2 * m + 2;
        let params = CodeParams::protograph(gamma, kappa, m, l).unwrap();
        let p = random_partition(&params, &mut rng);
        let h = build_sc_protograph(&p, l).matrix;
        let mut buckets: BTreeMap<(usize, usize, usize), i64> = BTreeMap::new();
        for w in closed_walks(&h, GUARD) {
            let vs: Vec<usize> = w.iter().skip(1).step_by(2).map(|v| v / kappa).collect();
            let (lo, hi) = (*vs.iter().min().unwrap(), *vs.iter().max().unwrap());
            let cns = w.iter().step_by(2).collect::<std::collections::HashSet<_>>().len();
            let vns = w.iter().skip(1).step_by(2).collect::<std::collections::HashSet<_>>().len();
            let idx = DIMS.iter().position(|&d| d == (cns, vns)).unwrap();
            *buckets.entry((idx, lo, hi - lo + 1)).or_default() += 1;
        }
        let c = closed_form(&p, &params);
        for (i, pid) in PatternId::ALL.iter().enumerate() {
            for (k0, f) in c.span_counts(*pid).iter().enumerate() {
                let walks = buckets.get(&(i, 0, k0 + 1)).copied().unwrap_or(0);
                assert_eq!(*f, Ratio::new(walks, ZETA[i]), "{pid} k={} on {:?}", k0 + 1, p.rows());
            }
        }
    }
}
