//! Command bodies. Each returns a [`CommandOutput`] holding both the plain
//! report and its JSON form; the binary picks one and maps `all_checks_pass`
//! to the exit code.

use crate::enumerate::{enumerate_buffering_structures, EnumerationConfig};
use crate::format;
use crate::CliError;
use crnkit::arrow::{are_isomorphic, direct_sum, stoich_object, ArrowRep};
use crnkit::crn::{self, Crn, Subnetwork};
use crnkit::linalg::Matrix;
use crnkit::rational;
use crnkit::schur::{self, DimChecks};
use num_traits::One;
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

/// A command's rendered result.
pub struct CommandOutput {
    pub text: String,
    pub json: Value,
    pub all_checks_pass: bool,
}

impl CommandOutput {
    fn ok(text: String, json: Value) -> Self {
        CommandOutput { text, json, all_checks_pass: true }
    }
}

/// The subnetwork named on the command line: explicit edges or the
/// output-closure of the species.
pub enum EdgeSpec {
    Auto,
    Explicit(Vec<String>),
}

pub fn resolve_subnetwork(
    host: &Crn,
    species: &[String],
    edges: &EdgeSpec,
) -> Result<Subnetwork, CliError> {
    let check_label = |label: &String, known: bool| {
        if known {
            Ok(())
        } else {
            Err(CliError::Precondition(format!("unknown label {label:?}")))
        }
    };
    for s in species {
        check_label(s, host.species_index(s).is_some())?;
    }
    let edge_list: Vec<String> = match edges {
        EdgeSpec::Auto => {
            let set: BTreeSet<String> = species.iter().cloned().collect();
            crn::output_closure(host, &set).into_iter().collect()
        }
        EdgeSpec::Explicit(list) => {
            for e in list {
                check_label(e, host.reaction_index(e).is_some())?;
            }
            list.clone()
        }
    };
    Subnetwork::new(host, species.iter().cloned(), edge_list)
        .map_err(|e| CliError::Precondition(e.to_string()))
}

fn matrix_json(m: &Matrix, row_labels: &[String], col_labels: &[String]) -> Value {
    serde_json::to_value(format::matrix_to_document(m, row_labels, col_labels))
        .expect("matrix documents serialize")
}

/// Renders a matrix with row and column labels.
fn labeled_matrix_text(m: &Matrix, row_labels: &[String], col_labels: &[String]) -> String {
    let body = m.render_rows();
    let row_width = row_labels.iter().map(String::len).max().unwrap_or(0);
    let mut lines = Vec::new();
    // Column header aligned to the rendered body.
    if m.rows() > 0 && m.cols() > 0 {
        let cells: Vec<Vec<String>> = body.iter().map(|l| split_row(l)).collect();
        let widths: Vec<usize> = (0..m.cols())
            .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0).max(col_labels[j].len()))
            .collect();
        let header = col_labels
            .iter()
            .enumerate()
            .map(|(j, l)| format!("{l:>width$}", width = widths[j]))
            .collect::<Vec<_>>()
            .join("  ");
        lines.push(format!("{:row_width$}  {header}", ""));
        for (i, row) in cells.iter().enumerate() {
            let row_text = row
                .iter()
                .enumerate()
                .map(|(j, c)| format!("{c:>width$}", width = widths[j]))
                .collect::<Vec<_>>()
                .join("  ");
            lines.push(format!("{:row_width$}  {row_text}", row_labels[i]));
        }
    } else {
        lines.push(format!("(empty {}x{} matrix)", m.rows(), m.cols()));
    }
    lines.join("\n")
}

fn split_row(line: &str) -> Vec<String> {
    line.split_whitespace().map(str::to_string).collect()
}

/// One basis vector rendered as `label=coeff` pairs over its support.
fn vector_support_text(coeffs: &[crnkit::Rational], labels: &[String]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .zip(labels)
        .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
        .map(|(c, l)| {
            if c.is_one() {
                l.clone()
            } else {
                format!("{} {l}", rational::display(c))
            }
        })
        .collect();
    if parts.is_empty() { "0".to_string() } else { parts.join(" + ") }
}

fn coeff_values(coeffs: &[crnkit::Rational]) -> Value {
    Value::Array(coeffs.iter().map(|c| serde_json::to_value(format::Coefficient::from_rational(c)).unwrap()).collect())
}

/// A reaction rendered as `inputs -> outputs` with `∅` for empty sides.
pub fn reaction_arrow_text(r: &crnkit::crn::Reaction) -> String {
    let side = |m: &std::collections::BTreeMap<String, crnkit::Rational>| {
        if m.is_empty() {
            return "∅".to_string();
        }
        m.iter()
            .map(|(s, c)| if c.is_one() { s.clone() } else { format!("{} {s}", rational::display(c)) })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    format!("{} -> {}", side(r.inputs()), side(r.outputs()))
}

/// `info`: the stoichiometric matrix, rank, steady-state flux basis and
/// conserved charges.
pub fn cmd_info(network_path: &Path) -> Result<CommandOutput, CliError> {
    let crn = format::parse_crn_file(network_path)?;
    let s = crn.stoich_matrix();
    let rank = s.rank();
    let flux = s.null_space_basis();
    let charges = s.left_null_space_basis();
    let reaction_ids: Vec<String> = crn.reactions().iter().map(|r| r.id().to_string()).collect();

    let mut text = String::new();
    let _ = writeln!(text, "network: {}", network_path.display());
    let _ = writeln!(text, "species: {}, reactions: {}", crn.species().len(), crn.reactions().len());
    for w in crn.negative_coefficient_warnings() {
        let _ = writeln!(text, "warning: {w}");
    }
    let _ = writeln!(text, "\nstoichiometric matrix (rows = species, columns = reactions):");
    let _ = writeln!(text, "{}", labeled_matrix_text(&s, crn.species(), &reaction_ids));
    let _ = writeln!(text, "rank: {rank}");
    let _ = writeln!(text, "\nsteady-state flux basis (dim H1 = {}):", flux.cols());
    for k in 0..flux.cols() {
        let _ = writeln!(text, "  {}", vector_support_text(&flux.column(k), &reaction_ids));
    }
    if flux.cols() == 0 {
        let _ = writeln!(text, "  (none)");
    }
    let _ = writeln!(text, "\nconserved charges (dim H0 = {}):", charges.rows());
    for k in 0..charges.rows() {
        let _ = writeln!(text, "  {}", vector_support_text(&charges.row(k), crn.species()));
    }
    if charges.rows() == 0 {
        let _ = writeln!(text, "  (none)");
    }

    let json = json!({
        "network": network_path.display().to_string(),
        "species": crn.species(),
        "reactions": reaction_ids,
        "matrix": matrix_json(&s, crn.species(), &reaction_ids),
        "rank": rank,
        "dim_h1": flux.cols(),
        "dim_h0": charges.rows(),
        "flux_basis": (0..flux.cols()).map(|k| coeff_values(&flux.column(k))).collect::<Vec<_>>(),
        "conserved_charges": (0..charges.rows()).map(|k| coeff_values(&charges.row(k))).collect::<Vec<_>>(),
    });
    Ok(CommandOutput::ok(text, json))
}

fn lambda_breakdown(host: &Crn, sub: &Subnetwork) -> (i64, usize, usize, usize, usize) {
    let v = sub.species().len();
    let e = sub.edges().len();
    let supp = schur::kernel_supported_dim(host, sub);
    let proj = schur::coker_projection_dim(host, sub);
    (schur::buffering_index(host, sub), v, e, supp, proj)
}

fn subnetwork_json(sub: &Subnetwork) -> Value {
    json!({
        "species": sub.species().iter().collect::<Vec<_>>(),
        "edges": sub.edges().iter().collect::<Vec<_>>(),
    })
}

/// `check`: output-completeness, the buffering index with all four terms,
/// and the compatibility flags.
pub fn cmd_check(
    network_path: &Path,
    species: &[String],
    edges: &EdgeSpec,
) -> Result<CommandOutput, CliError> {
    let crn = format::parse_crn_file(network_path)?;
    let sub = resolve_subnetwork(&crn, species, edges)?;
    let violations = crn::output_completeness_violations(&crn, &sub);
    let output_complete = violations.is_empty();
    let (lambda, v, e, supp, proj) = lambda_breakdown(&crn, &sub);
    let bd = schur::block_decompose(&crn, &sub);
    let (compat_ker, compat_im) = schur::check_compatibility(&bd);
    let buffering = output_complete && lambda == 0;

    let mut text = String::new();
    let _ = writeln!(
        text,
        "subnetwork: species {{{}}}; edges {{{}}}",
        sub.species().iter().cloned().collect::<Vec<_>>().join(", "),
        sub.edges().iter().cloned().collect::<Vec<_>>().join(", ")
    );
    if output_complete {
        let _ = writeln!(text, "output-complete: yes");
    } else {
        for (edge, sp) in &violations {
            let _ = writeln!(text, "output-complete: no ({edge} consumes {sp})");
        }
    }
    let _ = writeln!(
        text,
        "buffering index: lambda = -{v} + {e} - {supp} + {proj} = {lambda}"
    );
    let _ = writeln!(
        text,
        "compatibility: ker(a11) <= ker(a21): {}; im(a12) <= im(a11): {}",
        yesno(compat_ker),
        yesno(compat_im)
    );
    let _ = writeln!(text, "buffering structure: {}", yesno(buffering));

    let json = json!({
        "network": network_path.display().to_string(),
        "subnetwork": subnetwork_json(&sub),
        "output_complete": output_complete,
        "violations": violations.iter().map(|(e, s)| json!([e, s])).collect::<Vec<_>>(),
        "lambda": lambda,
        "lambda_terms": {
            "internal_species": v,
            "internal_edges": e,
            "kernel_supported_dim": supp,
            "coker_projection_dim": proj,
        },
        "compat_ker": compat_ker,
        "compat_im": compat_im,
        "buffering_structure": buffering,
    });
    Ok(CommandOutput::ok(text, json))
}

fn yesno(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

/// `enumerate`: buffering structures under the configured bounds.
pub fn cmd_enumerate(
    network_path: &Path,
    config: &EnumerationConfig,
) -> Result<CommandOutput, CliError> {
    let crn = format::parse_crn_file(network_path)?;
    let found = enumerate_buffering_structures(&crn, config)?;

    let mut text = String::new();
    let _ = writeln!(
        text,
        "buffering structures (max internal species {}, edge supersets: {}):",
        config.max_internal_species,
        yesno(config.include_edge_supersets)
    );
    for c in &found {
        let _ = writeln!(
            text,
            "  species {{{}}} edges {{{}}} lambda={} compatible={}",
            c.species.join(", "),
            c.edges.join(", "),
            c.lambda,
            yesno(c.compat_ker && c.compat_im)
        );
    }
    if found.is_empty() {
        let _ = writeln!(text, "  (none)");
    }

    let json = json!({
        "network": network_path.display().to_string(),
        "candidates": found.iter().map(|c| json!({
            "species": c.species,
            "edges": c.edges,
            "lambda": c.lambda,
            "compat_ker": c.compat_ker,
            "compat_im": c.compat_im,
        })).collect::<Vec<_>>(),
    });
    Ok(CommandOutput::ok(text, json))
}

fn dims_json(d: &DimChecks) -> Value {
    json!({
        "ker_s": d.ker_s,
        "ker_s_gamma": d.ker_s_gamma,
        "ker_sigma": d.ker_sigma,
        "coker_s": d.coker_s,
        "coker_s_gamma": d.coker_s_gamma,
        "coker_sigma": d.coker_sigma,
        "kernel_equality": d.kernel_equality(),
        "cokernel_equality": d.cokernel_equality(),
    })
}

fn dims_text(d: &DimChecks) -> String {
    format!(
        "dimension checks: ker {} - {} = {} ({}); coker {} - {} = {} ({})",
        d.ker_s,
        d.ker_s_gamma,
        d.ker_sigma,
        yesno(d.kernel_equality()),
        d.coker_s,
        d.coker_s_gamma,
        d.coker_sigma,
        yesno(d.cokernel_equality())
    )
}

/// `reduce`: run the reduction, write the reduced network, report σ, the
/// rewired edges and the dimension checks.
pub fn cmd_reduce(
    network_path: &Path,
    species: &[String],
    edges: &EdgeSpec,
    output: &Path,
    force: bool,
) -> Result<CommandOutput, CliError> {
    let crn = format::parse_crn_file(network_path)?;
    let sub = resolve_subnetwork(&crn, species, edges)?;
    let (reduced, report) = schur::reduce_with(&crn, &sub, force)
        .map_err(|e| CliError::Precondition(e.to_string()))?;
    format::write_crn_file(&reduced, output)?;

    let mut text = String::new();
    let _ = writeln!(
        text,
        "reduced along species {{{}}}, edges {{{}}}",
        sub.species().iter().cloned().collect::<Vec<_>>().join(", "),
        sub.edges().iter().cloned().collect::<Vec<_>>().join(", ")
    );
    let _ = writeln!(text, "lambda: {}", report.lambda);
    let _ = writeln!(text, "output-complete: {}", yesno(report.output_complete));
    let _ = writeln!(
        text,
        "compatibility: ker {} / im {}",
        yesno(report.compat_ker),
        yesno(report.compat_im)
    );
    let _ = writeln!(text, "certified: {}", yesno(report.certified));
    let _ = writeln!(text, "\nschur complement sigma:");
    let _ = writeln!(
        text,
        "{}",
        labeled_matrix_text(&report.sigma, &report.reduced_species, &report.reduced_edges)
    );
    let _ = writeln!(text, "\nrewired edges:");
    if report.rewired_edges.is_empty() {
        let _ = writeln!(text, "  (none)");
    }
    for rw in &report.rewired_edges {
        let old = crn.reaction(&rw.edge).expect("rewired edge exists");
        let counterpart = crn::primed_counterpart(&rw.edge, &report.reduced_edges)
            .expect("reduced edge labels are primed originals");
        let new = reduced.reaction(&counterpart).expect("primed edge exists");
        let _ = writeln!(
            text,
            "  {}: ({}) -> ({})",
            rw.edge,
            reaction_arrow_text(old),
            reaction_arrow_text(new)
        );
    }
    let _ = writeln!(text, "\n{}", dims_text(&report.dims));
    let _ = writeln!(text, "wrote {}", output.display());

    let json = json!({
        "network": network_path.display().to_string(),
        "subnetwork": subnetwork_json(&sub),
        "lambda": report.lambda,
        "output_complete": report.output_complete,
        "compat_ker": report.compat_ker,
        "compat_im": report.compat_im,
        "certified": report.certified,
        "sigma": matrix_json(&report.sigma, &report.reduced_species, &report.reduced_edges),
        "dims": dims_json(&report.dims),
        "rewired_edges": report.rewired_edges.iter().map(|rw| json!({
            "edge": rw.edge,
            "old_column": coeff_values(&rw.old_column),
            "new_column": coeff_values(&rw.new_column),
        })).collect::<Vec<_>>(),
        "output_file": output.display().to_string(),
    });
    Ok(CommandOutput::ok(text, json))
}

/// `recon`: reconstruct a network from a labeled matrix and write it. The
/// written network's stoichiometric matrix is asserted equal to the input
/// before anything is written.
pub fn cmd_recon(matrix_path: &Path, output: &Path) -> Result<CommandOutput, CliError> {
    let arrow = format::parse_matrix_file(matrix_path)?;
    let crn = crnkit::recon::recon_object(&arrow);
    assert_eq!(
        &crn.stoich_matrix(),
        arrow.matrix(),
        "reconstruction round-trip must be exact"
    );
    format::write_crn_file(&crn, output)?;

    let mut text = String::new();
    let _ = writeln!(text, "reconstructed network from {}", matrix_path.display());
    for r in crn.reactions() {
        let _ = writeln!(text, "  {}: {}", r.id(), reaction_arrow_text(r));
    }
    let _ = writeln!(text, "wrote {}", output.display());

    let json = json!({
        "matrix": matrix_path.display().to_string(),
        "species": crn.species(),
        "reactions": crn.reactions().iter().map(|r| r.id().to_string()).collect::<Vec<_>>(),
        "output_file": output.display().to_string(),
    });
    Ok(CommandOutput::ok(text, json))
}

/// `verify`: the reduction theorem's dimension equalities, the L/R
/// congruence when the internal block is invertible, and the direct-sum
/// isomorphism. Exit code 0 iff all applicable checks pass.
pub fn cmd_verify(
    network_path: &Path,
    species: &[String],
    edges: &EdgeSpec,
) -> Result<CommandOutput, CliError> {
    let crn = format::parse_crn_file(network_path)?;
    let sub = resolve_subnetwork(&crn, species, edges)?;
    let report = schur::verify_reduction_theorem(&crn, &sub);
    let bd = schur::block_decompose(&crn, &sub);
    let sigma = schur::schur_complement(&bd).ok();

    let mut text = String::new();
    let mut all_pass = true;
    let mut check = |name: &str, outcome: Option<bool>, text: &mut String| {
        match outcome {
            Some(ok) => {
                let _ = writeln!(text, "{name}: {}", if ok { "pass" } else { "FAIL" });
                all_pass &= ok;
            }
            None => {
                let _ = writeln!(text, "{name}: not applicable");
            }
        }
    };

    check("reduction preconditions (lambda = 0, output-complete)", Some(report.applicable), &mut text);
    let dim_outcome = report
        .dims
        .as_ref()
        .map(|d| d.kernel_equality() && d.cokernel_equality());
    check("dimension equalities", dim_outcome, &mut text);
    if let Some(d) = &report.dims {
        let _ = writeln!(text, "  {}", dims_text(d));
    }

    let lr = schur::lr_congruence(&bd).ok();
    let lr_outcome = lr.as_ref().map(|lr| {
        let sigma = sigma.as_ref().expect("invertible block implies sigma");
        let expected = Matrix::from_blocks(
            &bd.a11,
            &Matrix::zeros(bd.a11.rows(), sigma.cols()),
            &Matrix::zeros(sigma.rows(), bd.a11.cols()),
            sigma,
        );
        lr.m == expected
            && lr.l.det() == rational::int(1)
            && lr.r.det() == rational::int(1)
    });
    check("L/R congruence (RSL block-diagonal, det 1)", lr_outcome, &mut text);

    let iso_outcome = sigma.as_ref().map(|sigma| {
        let a11_arrow = ArrowRep::new(
            bd.a11.clone(),
            bd.internal_edges.clone(),
            bd.internal_species.clone(),
        )
        .expect("block labels are unique");
        let sigma_arrow = ArrowRep::new(
            sigma.clone(),
            bd.external_edges.clone(),
            bd.external_species.clone(),
        )
        .expect("block labels are unique");
        are_isomorphic(&stoich_object(&crn), &direct_sum(&a11_arrow, &sigma_arrow))
    });
    check("S isomorphic to a11 (+) sigma", iso_outcome, &mut text);

    let verdict = all_pass;
    let _ = writeln!(text, "overall: {}", if verdict { "pass" } else { "FAIL" });

    let json = json!({
        "network": network_path.display().to_string(),
        "subnetwork": subnetwork_json(&sub),
        "theorem": {
            "lambda": report.lambda,
            "output_complete": report.output_complete,
            "applicable": report.applicable,
            "dims": report.dims.as_ref().map(dims_json),
        },
        "lr_congruence": lr_outcome,
        "direct_sum_isomorphic": iso_outcome,
        "all_pass": verdict,
    });
    Ok(CommandOutput { text, json, all_checks_pass: verdict })
}
