mod common;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scforge::lifting::{assemble_parity_matrix, count_40_uas, count_f_sc, girth_ok, CirculantPowers};
use scforge::matrix::BinaryMatrix;
use scforge::protograph::PartitionMatrix;
use scforge::CodeParams;

use common::{brute_force_fully_chorded, brute_force_lifted_count, random_partition};

const GUARD: usize = 600;

fn random_powers(params: &CodeParams, rng: &mut ChaCha8Rng) -> CirculantPowers {
    let f = (0..params.gamma * params.kappa).map(|_| rng.gen_range(0..params.z as u32)).collect();
    CirculantPowers::new(params.gamma, params.kappa, params.z, f).unwrap()
}

#[test]
fn refuses_four_cycles() {
    let h = BinaryMatrix::from_dense(&[vec![1, 1], vec![1, 1]]);
    assert_eq!(brute_force_lifted_count(&h, GUARD), None);
}

/// Two disjoint 8-cycles plus one 8-cycle with a chorded diagonal.
#[test]
fn hand_counted_toy() {
    let cycle = |cs: [usize; 4], vs: [usize; 4]| (0..4).flat_map(move |t| [(cs[t], vs[t]), (cs[(t + 1) % 4], vs[t])]);
    let mut e: Vec<(usize, usize)> = cycle([0, 1, 2, 3], [0, 1, 2, 3]).collect();
    e.extend(cycle([4, 5, 6, 7], [4, 5, 6, 7]));
    e.extend(cycle([8, 9, 10, 11], [8, 9, 10, 11]));
    e.extend([(12, 8), (12, 10)]);
    let h = BinaryMatrix::from_entries(13, 12, e);
    assert_eq!(brute_force_lifted_count(&h, GUARD), Some(2));
}

#[test]
fn random_girth_six_codes_match_window_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
    let (mut checked, mut nonzero) = (0, 0);
    while checked < 60 {
        let gamma = 3 + usize::from(rng.gen_bool(0.3));
        let kappa = rng.gen_range(gamma..=5);
        let z = rng.gen_range(kappa.max(2)..=7);
        let m = rng.gen_range(0..=1);
        let l = rng.gen_range(2 * m + 1..=5);
        let Ok(params) = CodeParams::new(gamma, kappa, z, m, l) else { continue };
        let p = random_partition(&params, &mut rng);
        let f = random_powers(&params, &mut rng);
        if !girth_ok(&p, &f, &params).unwrap() {
            continue;
        }
        let code = assemble_parity_matrix(&p, &f, &params).unwrap();
        let brute = brute_force_lifted_count(&code.h, GUARD).expect("girth_ok implies no 4-cycles");
        assert_eq!(
            count_f_sc(&p, &f, &params).unwrap(),
            Ratio::from_integer(brute),
            "{params:?} {:?} {:?}",
            p.rows(),
            f.rows()
        );
        if gamma == 3 {
            assert_eq!(Some(count_40_uas(&p, &f, &params).unwrap()), brute_force_fully_chorded(&code.h, GUARD));
        }
        nonzero += usize::from(brute > 0);
        checked += 1;
    }
    assert!(nonzero > 10);
}

/// With a 4-cycle-free lift the brute-force count agrees with `girth_ok`.
#[test]
fn girth_check_agrees_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let params = CodeParams::new(3, 4, 5, 1, 3).unwrap();
        let p = random_partition(&params, &mut rng);
        let f = random_powers(&params, &mut rng);
        let h = assemble_parity_matrix(&p, &f, &params).unwrap().h;
        assert_eq!(girth_ok(&p, &f, &params).unwrap(), brute_force_lifted_count(&h, GUARD).is_some());
    }
}

#[test]
fn fully_chorded_cycle_detected() {
    let params = CodeParams::new(3, 4, 10, 0, 1).unwrap();
    let p = PartitionMatrix::uncoupled(&params);
    let f = CirculantPowers::from_rows(10, &[vec![5, 3, 7, 9], vec![8, 9, 2, 7], vec![4, 1, 2, 1]]).unwrap();
    assert!(girth_ok(&p, &f, &params).unwrap());
    let h = assemble_parity_matrix(&p, &f, &params).unwrap().h;
    let n = count_40_uas(&p, &f, &params).unwrap();
    assert!(n > 0);
    assert_eq!(Some(n), brute_force_fully_chorded(&h, GUARD));
}
