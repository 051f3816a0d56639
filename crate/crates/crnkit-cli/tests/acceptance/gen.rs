//! Seeded random generators for the acceptance suite: matrices, networks,
//! morphisms, and networks with planted buffering structures.

use crnkit::arrow::ArrowRep;
use crnkit::crn::{Crn, CrnMorphism, EdgeImage, Reaction, Subnetwork};
use crnkit::linalg::Matrix;
use crnkit::rational::{self, Rational};
use crnkit::recon;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rational::int(rng.gen_range(lo..=hi)))
}

/// A random integer matrix with determinant ±1: a product of unit
/// triangular factors and a signed permutation.
pub fn invertible_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let lower = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            rational::int(1)
        } else if i > j {
            rational::int(rng.gen_range(-2..=2))
        } else {
            Rational::zero()
        }
    });
    let upper = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            rational::int(if rng.gen_bool(0.5) { 1 } else { -1 })
        } else if i < j {
            rational::int(rng.gen_range(-2..=2))
        } else {
            Rational::zero()
        }
    });
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let p = Matrix::from_fn(n, n, |i, j| {
        if perm[i] == j { rational::int(1) } else { Rational::zero() }
    });
    &(&lower * &upper) * &p
}

pub fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// A random network with nonnegative coefficients, occasionally fractional,
/// occasionally catalytic or degenerate.
pub fn random_crn(rng: &mut ChaCha8Rng, max_species: usize, max_reactions: usize) -> Crn {
    let n_sp = rng.gen_range(1..=max_species.max(1));
    let n_rx = rng.gen_range(0..=max_reactions);
    let species = labels("s", n_sp);
    let coeff = |rng: &mut ChaCha8Rng| -> Rational {
        if rng.gen_bool(0.15) {
            rational::frac(rng.gen_range(1..=3), 2)
        } else {
            rational::int(rng.gen_range(1..=3))
        }
    };
    let reactions = (1..=n_rx)
        .map(|k| {
            let mut inputs = Vec::new();
            let mut outputs = Vec::new();
            for s in &species {
                if rng.gen_bool(0.35) {
                    inputs.push((s.clone(), coeff(rng)));
                }
                if rng.gen_bool(0.35) {
                    outputs.push((s.clone(), coeff(rng)));
                }
            }
            // Occasionally plant an exactly degenerate reaction.
            if rng.gen_bool(0.2) {
                outputs = inputs.clone();
            }
            Reaction::new(format!("r{k}"), inputs, outputs)
        })
        .collect();
    Crn::new(species, reactions).expect("generated labels are unique")
}

/// A random monomolecular network: every reaction is one of `∅→x`, `x→∅`,
/// `x→y` or `x→x`, with unit coefficients.
pub fn monomolecular_crn(rng: &mut ChaCha8Rng, max_species: usize, max_reactions: usize) -> Crn {
    let n_sp = rng.gen_range(1..=max_species.max(1));
    let n_rx = rng.gen_range(1..=max_reactions.max(1));
    let species = labels("x", n_sp);
    let reactions = (1..=n_rx)
        .map(|k| {
            let x = species[rng.gen_range(0..n_sp)].as_str();
            let y = species[rng.gen_range(0..n_sp)].as_str();
            let id = format!("e{k}");
            match rng.gen_range(0..4) {
                0 => Reaction::unit(id, [], [x]),
                1 => Reaction::unit(id, [x], []),
                2 => Reaction::unit(id, [x], [y]),
                _ => Reaction::unit(id, [x], [x]),
            }
        })
        .collect();
    Crn::new(species, reactions).expect("generated labels are unique")
}

/// A random integer arrow without zero columns.
pub fn nonzero_column_arrow(rng: &mut ChaCha8Rng, max_dom: usize, max_cod: usize) -> ArrowRep {
    let dom = rng.gen_range(1..=max_dom);
    let cod = rng.gen_range(1..=max_cod);
    let mut m = int_matrix(rng, cod, dom, -2, 2);
    for j in 0..dom {
        while m.column(j).iter().all(Rational::is_zero) {
            m.set(rng.gen_range(0..cod), j, rational::int(rng.gen_range(1..=2)));
        }
    }
    ArrowRep::new(m, labels("a", dom), labels("b", cod)).expect("labels sized to the matrix")
}

/// A random arrow whose reconstruction is monomolecular: every column has
/// at most one `-1` and at most one `+1` (in distinct rows) and is nonzero.
pub fn monomolecular_arrow(rng: &mut ChaCha8Rng, max_dom: usize, max_cod: usize) -> ArrowRep {
    let dom = rng.gen_range(1..=max_dom);
    let cod = rng.gen_range(1..=max_cod);
    let mut m = Matrix::zeros(cod, dom);
    for j in 0..dom {
        let target = rng.gen_range(0..cod);
        match rng.gen_range(0..3) {
            0 => m.set(target, j, rational::int(1)),
            1 => m.set(target, j, rational::int(-1)),
            _ => {
                m.set(target, j, rational::int(1));
                if cod > 1 {
                    let mut source = rng.gen_range(0..cod);
                    while source == target {
                        source = rng.gen_range(0..cod);
                    }
                    m.set(source, j, rational::int(-1));
                }
            }
        }
    }
    ArrowRep::new(m, labels("p", dom), labels("q", cod)).expect("labels sized to the matrix")
}

/// A network with a planted buffering structure, returned with its
/// subnetwork. The internal block is invertible, or (half the time)
/// extended by a dependent internal edge so it is singular but still
/// compatible; the external block is corrected so the Schur complement has
/// full row rank, which forces the buffering index to zero.
pub fn planted_buffering_network(rng: &mut ChaCha8Rng) -> (Crn, Subnetwork) {
    let n = rng.gen_range(1..=3);
    let ext_v = rng.gen_range(1..=2);
    let ext_e = ext_v + rng.gen_range(0..=2);

    let a11 = invertible_matrix(rng, n);
    let a12 = int_matrix(rng, n, ext_e, 0, 2);
    let a21 = int_matrix(rng, ext_v, n, -2, 2);
    // Full-row-rank target: [I | junk] with randomly signed rows.
    let sigma_target = Matrix::from_fn(ext_v, ext_e, |i, j| {
        if j == i {
            rational::int(if rng.gen_bool(0.5) { 1 } else { -1 })
        } else if j < ext_v {
            Rational::zero()
        } else {
            rational::int(rng.gen_range(-2..=2))
        }
    });
    let lift = &a11.inverse().expect("constructed invertible") * &a12;
    let a22 = &sigma_target + &(&a21 * &lift);

    // Optionally append a dependent internal edge, making a11 singular while
    // keeping both compatibility conditions.
    let (a11, a21) = if rng.gen_bool(0.5) {
        let w = int_matrix(rng, n, 1, -2, 2);
        (a11.hstack(&(&a11 * &w)), a21.hstack(&(&a21 * &w)))
    } else {
        (a11, a21)
    };

    let s = Matrix::from_blocks(&a11, &a12, &a21, &a22);
    let internal_species = labels("iv", n);
    let external_species = labels("xv", ext_v);
    let internal_edges = labels("ie", a11.cols());
    let external_edges = labels("xe", ext_e);
    let mut species = internal_species.clone();
    species.extend(external_species);
    let mut edges = internal_edges.clone();
    edges.extend(external_edges);
    let arrow = ArrowRep::new(s, edges, species).expect("generated labels are unique");
    let crn = recon::recon_object(&arrow);
    let sub = Subnetwork::new(&crn, internal_species, internal_edges)
        .expect("planted labels exist");
    (crn, sub)
}

/// A random valid morphism out of `from`, built as a pushforward: species
/// are merged by a set map (optionally scaled), and each reaction either
/// maps to its image reaction or, when its image is degenerate, sometimes
/// to the basepoint. Valid by construction.
pub fn pushforward_morphism(rng: &mut ChaCha8Rng, from: &Crn) -> (Crn, CrnMorphism) {
    let n = from.species().len();
    let k = if n == 0 { 0 } else { rng.gen_range(1..=n) };
    let target_species = labels("w", k);
    let assignment: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k.max(1))).collect();
    let scale = match rng.gen_range(0..5) {
        0 => rational::int(2),
        1 => rational::frac(1, 2),
        _ => rational::int(1),
    };
    let phi0 = Matrix::from_fn(k, n, |i, j| {
        if assignment[j] == i { scale.clone() } else { Rational::zero() }
    });

    let mut phi1 = BTreeMap::new();
    let mut image_reactions = Vec::new();
    for r in from.reactions() {
        let s_img = &phi0 * &from.source_vector(r);
        let t_img = &phi0 * &from.target_vector(r);
        if s_img == t_img && rng.gen_bool(0.5) {
            phi1.insert(r.id().to_string(), EdgeImage::Basepoint);
            continue;
        }
        let id = format!("{}m", r.id());
        let sparse = |v: &Matrix| {
            (0..k)
                .filter(|&i| !v.get(i, 0).is_zero())
                .map(|i| (target_species[i].clone(), v.get(i, 0).clone()))
                .collect::<Vec<_>>()
        };
        image_reactions.push(Reaction::new(id.clone(), sparse(&s_img), sparse(&t_img)));
        phi1.insert(r.id().to_string(), EdgeImage::Reaction(id));
    }
    let to = Crn::new(target_species, image_reactions).expect("generated labels are unique");
    (to, CrnMorphism::new(phi0, phi1))
}
