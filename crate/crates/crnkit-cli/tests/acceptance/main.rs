//! Acceptance suite: one test per criterion, each printing a pass line with
//! its timing. Golden values were derived with the independent Bareiss rank
//! oracle in [`oracle`] before the library was built, and the oracle keeps
//! cross-checking them here.
//!
//! Run with `cargo test -p crnkit-cli --test acceptance -- --nocapture`.

mod gen;
#[path = "../common/mod.rs"]
mod common;

use crnkit::arrow::{
    are_isomorphic, check_naturality, direct_sum, homology, induced_h0, induced_h1,
    stoich_morphism, stoich_object, ArrowRep, NatTrans,
};
use crnkit::crn::{self, Crn, CrnMorphism, EdgeImage, Subnetwork};
use crnkit::linalg::Matrix;
use crnkit::rational;
use crnkit::recon::{adjunction_phi, adjunction_psi, enumerate_restricted_homs, recon_object};
use crnkit::schur::{self, BlockDecomposition};
use crnkit::Rational;
use num_traits::Zero;
use rand::Rng;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

fn finish(criterion: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("acceptance {criterion}: PASS ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "{criterion} exceeded its time budget: {elapsed:?} >= {budget:?}"
    );
}

#[test]
fn criterion_01_golden_matrix_example1() {
    let start = Instant::now();
    let crn = common::example1();
    let expected = Matrix::from_i64_rows(&[
        &[1, 0, -1, 0, 0, 0],
        &[0, 1, -1, 0, 0, 0],
        &[0, 0, 1, -1, 0, 0],
        &[0, 0, 1, 0, -1, 0],
        &[0, 0, 0, 1, 0, -1],
    ]);
    let s = crn.stoich_matrix();
    assert_eq!(s, expected, "stoichiometric matrix must match entry for entry");
    // Independent oracle: rank 5, one flux, no conserved charges.
    assert_eq!(oracle::rank(&s), 5);
    assert_eq!(oracle::kernel_dim(&s), 1);
    assert_eq!(oracle::cokernel_dim(&s), 0);
    // The same network parsed from the shipped fixture.
    let parsed = crnkit_cli::format::parse_crn_file(&common::fixture("example1.crn")).unwrap();
    assert_eq!(parsed.stoich_matrix(), expected);
    finish("criterion 1 (golden matrix)", start, Duration::from_secs(1));
}

#[test]
fn criterion_02_golden_reduction_cycle4() {
    let start = Instant::now();
    let crn = common::cycle4();
    let sub = Subnetwork::new(&crn, ["v1", "v2"], ["e1", "e2", "e3"]).unwrap();

    assert!(crn::is_output_complete(&crn, &sub));
    assert_eq!(schur::buffering_index(&crn, &sub), 0);
    let bd = schur::block_decompose(&crn, &sub);
    assert_eq!(schur::check_compatibility(&bd), (true, true));
    let sigma = schur::schur_complement(&bd).unwrap();
    assert_eq!(sigma, Matrix::from_i64_rows(&[&[-1, 1, 1, 0], &[1, -1, 0, -1]]));

    let (reduced, report) = schur::reduce(&crn, &sub).unwrap();
    assert_eq!(reduced, common::cycle4_reduced());
    let rewired: Vec<&str> = report.rewired_edges.iter().map(|r| r.edge.as_str()).collect();
    assert_eq!(rewired, ["e5", "e6"]);

    // The tool reports the same through the CLI.
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_crnkit"))
        .args([
            "check",
            common::fixture("cycle4.crn").to_str().unwrap(),
            "--species",
            "v1,v2",
            "--edges",
            "e1,e2,e3",
            "--json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["output_complete"], true);
    assert_eq!(v["lambda"], 0);
    assert_eq!(v["compat_ker"], true);
    assert_eq!(v["compat_im"], true);
    finish("criterion 2 (golden reduction, 4-species cycle)", start, Duration::from_secs(1));
}

#[test]
fn criterion_03_golden_reduction_chain3() {
    let start = Instant::now();
    let crn = common::chain3();
    let sub = Subnetwork::new(&crn, ["v1"], ["e2"]).unwrap();

    assert_eq!(schur::buffering_index(&crn, &sub), 0);
    let sigma = schur::schur_complement(&schur::block_decompose(&crn, &sub)).unwrap();
    assert_eq!(sigma, Matrix::from_i64_rows(&[&[1, -1]]));
    let (reduced, _) = schur::reduce(&crn, &sub).unwrap();
    assert_eq!(reduced, common::chain3_reduced());

    // The corrected collapse morphism validates and is a reduction morphism.
    let collapse = CrnMorphism::new(
        Matrix::from_i64_rows(&[&[1, 1]]),
        BTreeMap::from([
            ("e1".to_string(), EdgeImage::Reaction("e1'".to_string())),
            ("e2".to_string(), EdgeImage::Basepoint),
            ("e3".to_string(), EdgeImage::Reaction("e3'".to_string())),
        ]),
    );
    assert!(crn::validate_morphism(&collapse, &crn, &reduced).unwrap().passes());
    assert!(crn::is_reduction_morphism(&collapse, &crn, &reduced, &sub).unwrap().passes());

    // The naive projection that forgets v1 fails validation.
    let naive = CrnMorphism::new(Matrix::from_i64_rows(&[&[0, 1]]), collapse.phi1.clone());
    assert!(!crn::validate_morphism(&naive, &crn, &reduced).unwrap().passes());
    finish("criterion 3 (golden reduction, chain)", start, Duration::from_secs(1));
}

#[test]
fn criterion_04_reduction_dimension_equalities() {
    let start = Instant::now();

    // Goldens, dimensions recomputed with the independent oracle.
    let cycle = common::cycle4();
    let cycle_sub = Subnetwork::new(&cycle, ["v1", "v2"], ["e1", "e2", "e3"]).unwrap();
    let bd = schur::block_decompose(&cycle, &cycle_sub);
    let sigma = schur::schur_complement(&bd).unwrap();
    assert_eq!(oracle::kernel_dim(&cycle.stoich_matrix()), 3);
    assert_eq!(oracle::kernel_dim(&bd.a11), 1);
    assert_eq!(oracle::kernel_dim(&sigma), 2);
    assert_eq!(oracle::cokernel_dim(&cycle.stoich_matrix()), 0);
    assert_eq!(oracle::cokernel_dim(&bd.a11), 0);
    assert_eq!(oracle::cokernel_dim(&sigma), 0);
    assert!(schur::verify_reduction_theorem(&cycle, &cycle_sub).passes());

    let chain = common::chain3();
    let chain_sub = Subnetwork::new(&chain, ["v1"], ["e2"]).unwrap();
    let bd = schur::block_decompose(&chain, &chain_sub);
    let sigma = schur::schur_complement(&bd).unwrap();
    assert_eq!(oracle::kernel_dim(&chain.stoich_matrix()), 1);
    assert_eq!(oracle::kernel_dim(&bd.a11), 0);
    assert_eq!(oracle::kernel_dim(&sigma), 1);
    assert!(schur::verify_reduction_theorem(&chain, &chain_sub).passes());

    // Randomized networks with planted buffering structures.
    let mut planted = 0;
    for seed in 0..110u64 {
        let mut rng = gen::rng(0x4000 + seed);
        let (crn, sub) = gen::planted_buffering_network(&mut rng);
        assert!(crn::is_output_complete(&crn, &sub), "seed {seed}");
        assert_eq!(schur::buffering_index(&crn, &sub), 0, "seed {seed}");
        let report = schur::verify_reduction_theorem(&crn, &sub);
        assert!(report.passes(), "seed {seed}: {report:?}");
        // Cross-check a sample of the dimension bookkeeping with the oracle.
        if seed % 7 == 0 {
            let bd = schur::block_decompose(&crn, &sub);
            let sigma = schur::schur_complement(&bd).unwrap();
            let s = crn.stoich_matrix();
            assert_eq!(
                oracle::kernel_dim(&sigma),
                oracle::kernel_dim(&s) - oracle::kernel_dim(&bd.a11),
                "seed {seed}"
            );
            assert_eq!(
                oracle::cokernel_dim(&sigma),
                oracle::cokernel_dim(&s) - oracle::cokernel_dim(&bd.a11),
                "seed {seed}"
            );
        }
        planted += 1;
    }
    assert!(planted >= 100);
    finish("criterion 4 (dimension equalities)", start, Duration::from_secs(30));
}

#[test]
fn criterion_05_schur_congruence_property() {
    let start = Instant::now();
    for seed in 0..520u64 {
        let mut rng = gen::rng(0x5000 + seed);
        let n = rng.gen_range(1..=4);
        let ext_v = rng.gen_range(1..=4);
        let ext_e = rng.gen_range(1..=4);
        let bd = BlockDecomposition::from_blocks(
            gen::invertible_matrix(&mut rng, n),
            gen::int_matrix(&mut rng, n, ext_e, -3, 3),
            gen::int_matrix(&mut rng, ext_v, n, -3, 3),
            gen::int_matrix(&mut rng, ext_v, ext_e, -3, 3),
        );
        let sigma = schur::schur_complement(&bd).unwrap();
        let lr = schur::lr_congruence(&bd).unwrap();
        let expected = Matrix::from_blocks(
            &bd.a11,
            &Matrix::zeros(n, ext_e),
            &Matrix::zeros(ext_v, n),
            &sigma,
        );
        assert_eq!(lr.m, expected, "seed {seed}: RSL must be block diagonal");
        assert_eq!(lr.l.det(), rational::int(1), "seed {seed}");
        assert_eq!(lr.r.det(), rational::int(1), "seed {seed}");

        let s_arrow = ArrowRep::new(
            bd.assembled(),
            [bd.internal_edges.clone(), bd.external_edges.clone()].concat(),
            [bd.internal_species.clone(), bd.external_species.clone()].concat(),
        )
        .unwrap();
        let a11_arrow =
            ArrowRep::new(bd.a11.clone(), bd.internal_edges.clone(), bd.internal_species.clone())
                .unwrap();
        let sigma_arrow =
            ArrowRep::new(sigma, bd.external_edges.clone(), bd.external_species.clone()).unwrap();
        assert!(
            are_isomorphic(&s_arrow, &direct_sum(&a11_arrow, &sigma_arrow)),
            "seed {seed}"
        );
    }
    finish("criterion 5 (Schur congruence, 520 random blocks)", start, Duration::from_secs(30));
}

#[test]
fn criterion_06_lift_independence() {
    let start = Instant::now();
    for seed in 0..210u64 {
        let mut rng = gen::rng(0x6000 + seed);
        let n = rng.gen_range(1..=4);
        let e_int = rng.gen_range(2..=4);
        let r = rng.gen_range(1..=n.min(e_int - 1));
        let ext_v = rng.gen_range(1..=3);
        let ext_e = rng.gen_range(1..=3);
        // a11 of rank <= r < e_int, so it has a nontrivial kernel; a12 lands
        // in its column space and a21 kills its kernel.
        let a11 = &gen::int_matrix(&mut rng, n, r, -2, 2) * &gen::int_matrix(&mut rng, r, e_int, -2, 2);
        let a12 = &a11 * &gen::int_matrix(&mut rng, e_int, ext_e, -2, 2);
        let a21 = &gen::int_matrix(&mut rng, ext_v, n, -2, 2) * &a11;
        let a22 = gen::int_matrix(&mut rng, ext_v, ext_e, -3, 3);
        let bd = BlockDecomposition::from_blocks(a11, a12, a21, a22);
        assert_eq!(schur::check_compatibility(&bd), (true, true), "seed {seed}");
        assert!(bd.a11.null_space_basis().cols() > 0, "seed {seed}: kernel is trivial");

        let sigma = schur::schur_complement(&bd).unwrap();
        // Recompute every column with an independently perturbed lift.
        let kernel = bd.a11.null_space_basis();
        for j in 0..bd.a12.cols() {
            let x = Matrix::column_vector(bd.a12.column(j));
            let base = bd.a11.solve(&x).expect("compatible lift exists");
            let coeffs = Matrix::from_fn(kernel.cols(), 1, |_, _| {
                rational::frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))
            });
            let perturbed = &base + &(&kernel * &coeffs);
            let column = &Matrix::column_vector(bd.a22.column(j)) - &(&bd.a21 * &perturbed);
            assert_eq!(column.column(0), sigma.column(j), "seed {seed}, column {j}");
        }
    }
    finish("criterion 6 (lift independence, 210 decompositions)", start, Duration::from_secs(30));
}

#[test]
fn criterion_07_functoriality_suite() {
    let start = Instant::now();
    for seed in 0..110u64 {
        let mut rng = gen::rng(0x7000 + seed);
        let g0 = gen::random_crn(&mut rng, 4, 4);
        let (g1, phi) = gen::pushforward_morphism(&mut rng, &g0);
        let (g2, psi) = gen::pushforward_morphism(&mut rng, &g1);

        assert!(crn::validate_morphism(&phi, &g0, &g1).unwrap().passes(), "seed {seed}");
        assert!(crn::validate_morphism(&psi, &g1, &g2).unwrap().passes(), "seed {seed}");
        let composite = crn::compose(&psi, &phi).unwrap();
        assert!(crn::validate_morphism(&composite, &g0, &g2).unwrap().passes(), "seed {seed}");

        let (a0, a1, a2) = (stoich_object(&g0), stoich_object(&g1), stoich_object(&g2));

        // Identity law.
        let id_nt = stoich_morphism(&crn::identity_morphism(&g0), &g0, &g0).unwrap();
        assert_eq!(id_nt, NatTrans::identity(&a0), "seed {seed}");
        assert_eq!(
            induced_h1(&id_nt, &a0, &a0).unwrap(),
            Matrix::identity(homology(&a0).dims().0),
            "seed {seed}"
        );
        assert_eq!(
            induced_h0(&id_nt, &a0, &a0).unwrap(),
            Matrix::identity(homology(&a0).dims().1),
            "seed {seed}"
        );

        // Composition law for the functor and both induced maps.
        let nt_phi = stoich_morphism(&phi, &g0, &g1).unwrap();
        let nt_psi = stoich_morphism(&psi, &g1, &g2).unwrap();
        let nt_comp = stoich_morphism(&composite, &g0, &g2).unwrap();
        assert_eq!(nt_comp, NatTrans::compose(&nt_psi, &nt_phi), "seed {seed}");
        assert!(check_naturality(&nt_comp, &a0, &a2), "seed {seed}");

        let h1_comp = induced_h1(&nt_comp, &a0, &a2).unwrap();
        let h1_chain = &induced_h1(&nt_psi, &a1, &a2).unwrap() * &induced_h1(&nt_phi, &a0, &a1).unwrap();
        assert_eq!(h1_comp, h1_chain, "seed {seed}: H1 functor law");

        let h0_comp = induced_h0(&nt_comp, &a0, &a2).unwrap();
        let h0_chain = &induced_h0(&nt_psi, &a1, &a2).unwrap() * &induced_h0(&nt_phi, &a0, &a1).unwrap();
        assert_eq!(h0_comp, h0_chain, "seed {seed}: H0 functor law");
    }
    finish("criterion 7 (functoriality, 110 composable pairs)", start, Duration::from_secs(30));
}

/// Independent network-side enumeration: every pair of set maps whose
/// pushforward validates as a network morphism into the reconstruction.
/// Deliberately avoids the arrow-side naturality code path.
fn enumerate_crn_homs(network: &Crn, a: &ArrowRep) -> Vec<CrnMorphism> {
    let target = recon_object(a);
    let n_species = network.species().len();
    let n_edges = network.reactions().len();
    let species_choices = target.species().len();
    let edge_choices = target.reactions().len() + 1;
    if species_choices == 0 && n_species > 0 {
        return Vec::new();
    }

    let mut result = Vec::new();
    let mut species_digits = vec![0usize; n_species];
    loop {
        let phi0 = Matrix::from_fn(species_choices, n_species, |i, j| {
            if species_digits[j] == i { rational::int(1) } else { Rational::zero() }
        });
        let mut edge_digits = vec![0usize; n_edges];
        loop {
            let phi1: BTreeMap<String, EdgeImage> = network
                .reactions()
                .iter()
                .zip(&edge_digits)
                .map(|(r, &d)| {
                    let image = if d < target.reactions().len() {
                        EdgeImage::Reaction(target.reactions()[d].id().to_string())
                    } else {
                        EdgeImage::Basepoint
                    };
                    (r.id().to_string(), image)
                })
                .collect();
            let candidate = CrnMorphism::new(phi0.clone(), phi1);
            if crn::validate_morphism(&candidate, network, &target).unwrap().passes() {
                result.push(candidate);
            }
            if !bump(&mut edge_digits, edge_choices) {
                break;
            }
        }
        if !bump(&mut species_digits, species_choices.max(1)) {
            break;
        }
    }
    result
}

fn bump(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

fn assert_adjunction_bijection(network: &Crn, a: &ArrowRep, context: &str) -> usize {
    let lhs = enumerate_restricted_homs(&stoich_object(network), a, 1_000_000).unwrap();
    let rhs = enumerate_crn_homs(network, a);
    assert_eq!(lhs.len(), rhs.len(), "{context}: hom-set cardinalities differ");

    for nt in &lhs {
        let morphism = adjunction_phi(nt, network, a)
            .unwrap_or_else(|e| panic!("{context}: phi undefined on {nt:?}: {e}"));
        assert!(rhs.contains(&morphism), "{context}: phi image not in the network hom-set");
        let back = adjunction_psi(&morphism, network, a).unwrap();
        assert_eq!(&back, nt, "{context}: psi(phi(x)) != x");
    }
    for morphism in &rhs {
        let nt = adjunction_psi(morphism, network, a)
            .unwrap_or_else(|e| panic!("{context}: psi undefined: {e}"));
        assert!(lhs.contains(&nt), "{context}: psi image not in the restricted hom-set");
        let forth = adjunction_phi(&nt, network, a).unwrap();
        assert_eq!(&forth, morphism, "{context}: phi(psi(y)) != y");
    }
    lhs.len()
}

#[test]
fn criterion_08_adjunction_bijection() {
    let start = Instant::now();

    // The chain fixture against the reduced arrow: exactly one morphism on
    // each side (the collapse).
    let chain = common::chain3();
    let sigma_arrow = ArrowRep::new(
        Matrix::from_i64_rows(&[&[1, -1]]),
        vec!["e1'".into(), "e3'".into()],
        vec!["v2'".into()],
    )
    .unwrap();
    let count = assert_adjunction_bijection(&chain, &sigma_arrow, "chain fixture");
    assert_eq!(count, 1);

    // Random monomolecular networks against arrows without zero columns,
    // the family on which the bijection is provable.
    for seed in 0..55u64 {
        let mut rng = gen::rng(0x8000 + seed);
        let network = gen::monomolecular_crn(&mut rng, 3, 3);
        let arrow = gen::nonzero_column_arrow(&mut rng, 3, 3);
        assert_adjunction_bijection(&network, &arrow, &format!("seed {seed}"));
    }
    finish("criterion 8 (adjunction bijection, 55 instances)", start, Duration::from_secs(60));
}

#[test]
fn criterion_09_recon_round_trip() {
    let start = Instant::now();
    for seed in 0..520u64 {
        let mut rng = gen::rng(0x9000 + seed);
        let rows = rng.gen_range(0..=5);
        let cols = rng.gen_range(0..=5);
        let m = gen::int_matrix(&mut rng, rows, cols, -5, 5);
        let arrow = ArrowRep::new(m.clone(), gen::labels("e", cols), gen::labels("v", rows)).unwrap();
        let crn = recon_object(&arrow);
        assert_eq!(crn.stoich_matrix(), m, "seed {seed}");
        assert!(crn.negative_coefficient_warnings().is_empty(), "seed {seed}");
    }
    finish("criterion 9 (reconstruction round-trip, 520 matrices)", start, Duration::from_secs(10));
}

#[test]
fn criterion_10_file_format_round_trip() {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();

    // Shipped fixtures: parse-write identity, bit-exact.
    for name in ["example1.crn", "cycle4.crn", "chain3.crn"] {
        let path = common::fixture(name);
        let bytes = std::fs::read_to_string(&path).unwrap();
        let parsed = crnkit_cli::format::parse_crn_file(&path).unwrap();
        let doc = crnkit_cli::format::crn_to_document(&parsed);
        assert_eq!(crnkit_cli::format::to_canonical_string(&doc), bytes, "{name}");
    }

    // Random networks, including fractional coefficients.
    for seed in 0..100u64 {
        let mut rng = gen::rng(0xA000 + seed);
        let crn = gen::random_crn(&mut rng, 5, 6);
        let path = dir.path().join(format!("net{seed}.crn"));
        crnkit_cli::format::write_crn_file(&crn, &path).unwrap();
        let bytes = std::fs::read_to_string(&path).unwrap();
        let parsed = crnkit_cli::format::parse_crn_file(&path).unwrap();
        assert_eq!(parsed, crn, "seed {seed}: parse(write(crn)) != crn");
        let rewritten =
            crnkit_cli::format::to_canonical_string(&crnkit_cli::format::crn_to_document(&parsed));
        assert_eq!(rewritten, bytes, "seed {seed}: canonical serialization drifted");
    }
    finish("criterion 10 (file round-trip, fixtures + 100 networks)", start, Duration::from_secs(10));
}

/// Companion harness for the verify command: a corrupted Schur complement
/// must flip the congruence comparison that drives the nonzero exit code.
#[test]
fn corrupted_sigma_fails_verification() {
    let crn = common::chain3();
    let sub = Subnetwork::new(&crn, ["v1"], ["e2"]).unwrap();
    let bd = schur::block_decompose(&crn, &sub);
    let sigma = schur::schur_complement(&bd).unwrap();
    let lr = schur::lr_congruence(&bd).unwrap();
    let diag = |sigma: &Matrix| {
        Matrix::from_blocks(
            &bd.a11,
            &Matrix::zeros(bd.a11.rows(), sigma.cols()),
            &Matrix::zeros(sigma.rows(), bd.a11.cols()),
            sigma,
        )
    };
    assert_eq!(lr.m, diag(&sigma));
    let mut corrupted = sigma.clone();
    let flipped = -corrupted.get(0, 0).clone();
    corrupted.set(0, 0, flipped);
    assert_ne!(lr.m, diag(&corrupted), "a flipped entry must break the congruence check");
}

/// Naturality of the hom-set bijection: post-composition with a restricted
/// morphism `g : A => A'` commutes with the bijection, i.e.
/// `phi(g . x) = recon(g) . phi(x)` on enumerated instances.
#[test]
fn adjunction_bijection_is_natural_in_the_arrow() {
    use crnkit::recon::{recon_morphism, RestrictedNatTrans};
    let mut checked = 0;
    for seed in 0..30u64 {
        let mut rng = gen::rng(0xC000 + seed);
        let network = gen::monomolecular_crn(&mut rng, 2, 2);
        // A monomolecular middle arrow keeps recon(g) inside the provable
        // domain of the bijection.
        let a = gen::monomolecular_arrow(&mut rng, 2, 2);
        let a_prime = gen::nonzero_column_arrow(&mut rng, 2, 2);
        let source = stoich_object(&network);
        let xs = enumerate_restricted_homs(&source, &a, 1_000_000).unwrap();
        let gs = enumerate_restricted_homs(&a, &a_prime, 1_000_000).unwrap();
        for x in &xs {
            for g in &gs {
                let composite = RestrictedNatTrans::compose(g, x).unwrap();
                let lhs = adjunction_phi(&composite, &network, &a_prime).unwrap();
                let rhs = crn::compose(
                    &recon_morphism(g, &a, &a_prime).unwrap(),
                    &adjunction_phi(x, &network, &a).unwrap(),
                )
                .unwrap();
                assert_eq!(lhs, rhs, "seed {seed}");
                checked += 1;
            }
        }
    }
    assert!(checked > 0, "no composable pairs were enumerated");
}

/// The Bareiss oracle and the library's row reduction agree on random
/// matrices, validating each against the other.
#[test]
fn oracle_agrees_with_library_rank() {
    for seed in 0..60u64 {
        let mut rng = gen::rng(0xB000 + seed);
        let rows = rng.gen_range(0..=6);
        let cols = rng.gen_range(0..=6);
        let m = gen::int_matrix(&mut rng, rows, cols, -4, 4);
        assert_eq!(oracle::rank(&m), m.rank(), "seed {seed}");
    }
}
