//! Text and JSON rendering of cells, descriptions, and verification
//! reports. Output is deterministic: identical inputs render byte-identical
//! text, and both formats list the same cells in the same order.

use serde_json::{json, Map, Value};

use crate::enumeration::SolutionSetDescription;
use crate::grid::{CellKind, IndexEntry};
use crate::oracle::VerificationReport;
use crate::rat::Rat;
use crate::subsystem::{LinearConstraint, Rel, SolutionCell};

pub fn point_str(x: &[Rat]) -> String {
    let coords: Vec<String> = x.iter().map(Rat::to_string).collect();
    format!("({})", coords.join(", "))
}

fn param_names(d: usize) -> Vec<String> {
    if d == 1 {
        vec!["t".to_string()]
    } else {
        (1..=d).map(|i| format!("t{i}")).collect()
    }
}

fn coefficient_str(mag: &Rat) -> String {
    let s = mag.to_string();
    if s.contains('/') {
        format!("({s})")
    } else {
        s
    }
}

/// `constant + sum coeffs[l] * name[l]` in compact form, e.g. `0.9-t`.
fn affine_expr(constant: &Rat, coeffs: &[Rat], names: &[String]) -> String {
    let mut out = String::new();
    if !constant.is_zero() {
        out.push_str(&constant.to_string());
    }
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if mag != Rat::one() {
            out.push_str(&coefficient_str(&mag));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn constraint_str(c: &LinearConstraint, names: &[String]) -> String {
    let lhs = affine_expr(&Rat::zero(), &c.coeffs, names);
    let rel = match c.rel {
        Rel::Le => "≤",
        Rel::Lt => "<",
    };
    format!("{lhs} {rel} {}", c.rhs)
}

/// The point set of a cell in the familiar brace notation, e.g.
/// `{(t, 0.9-t, 1-t) | t ∈ [0.3, 0.4]}`.
pub fn cell_set_str(cell: &SolutionCell) -> String {
    let d = cell.dim();
    if d == 0 {
        return format!("{{{}}}", point_str(&cell.origin));
    }
    let names = param_names(d);
    let exprs: Vec<String> = cell
        .origin
        .iter()
        .zip(&cell.directions)
        .map(|(o, dir)| affine_expr(o, dir, &names))
        .collect();
    let domain = if d == 1 {
        let (lo, ls, hi, hs) = cell
            .param_interval()
            .expect("one-dimensional cells have an interval");
        format!(
            "t ∈ {}{}, {}{}",
            if ls { "(" } else { "[" },
            lo,
            hi,
            if hs { ")" } else { "]" }
        )
    } else {
        cell.constraints
            .iter()
            .map(|c| constraint_str(c, &names))
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!("{{({}) | {}}}", exprs.join(", "), domain)
}

pub fn index_label(cell: &SolutionCell) -> String {
    if cell.source.index.is_empty() {
        "unique".to_string()
    } else {
        let parts: Vec<String> = cell.source.index.iter().map(|e| e.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

pub fn cell_line(cell: &SolutionCell) -> String {
    format!(
        "  {}: {}  witness {}",
        index_label(cell),
        cell_set_str(cell),
        point_str(&cell.witness)
    )
}

pub fn cells_text(kind: CellKind, cells: &[SolutionCell]) -> String {
    let word = match kind {
        CellKind::Minimal => "minimal",
        CellKind::Maximal => "maximal",
    };
    let mut out = format!("{word} cells: {}\n", cells.len());
    for cell in cells {
        out.push_str(&cell_line(cell));
        out.push('\n');
    }
    out
}

fn rat_strings(xs: &[Rat]) -> Value {
    Value::Array(xs.iter().map(|v| Value::String(v.to_string())).collect())
}

fn kind_str(kind: CellKind) -> &'static str {
    match kind {
        CellKind::Minimal => "min",
        CellKind::Maximal => "max",
    }
}

pub fn cell_json(cell: &SolutionCell) -> Value {
    let index: Vec<Value> = cell
        .source
        .index
        .iter()
        .map(|e| match e {
            IndexEntry::Seg(k) => json!(k),
            IndexEntry::Inf => json!("inf"),
        })
        .collect();
    let constraints: Vec<Value> = cell
        .constraints
        .iter()
        .map(|c| {
            json!({
                "coeffs": rat_strings(&c.coeffs),
                "rel": match c.rel { Rel::Le => "le", Rel::Lt => "lt" },
                "rhs": c.rhs.to_string(),
            })
        })
        .collect();
    json!({
        "source": {"kind": kind_str(cell.source.kind), "index": index},
        "origin": rat_strings(&cell.origin),
        "directions": Value::Array(cell.directions.iter().map(|row| rat_strings(row)).collect()),
        "constraints": constraints,
        "witness": rat_strings(&cell.witness),
    })
}

pub fn cells_json(kind: CellKind, cells: &[SolutionCell]) -> Value {
    json!({
        "kind": match kind { CellKind::Minimal => "minimal", CellKind::Maximal => "maximal" },
        "count": cells.len(),
        "cells": Value::Array(cells.iter().map(cell_json).collect()),
    })
}

pub fn description_text(desc: &SolutionSetDescription) -> String {
    let mut out = format!("solvable: {}\n", if desc.solvable { "yes" } else { "no" });
    for s in &desc.shortcuts {
        out.push_str(&format!("shortcut: {}\n", s.tag()));
    }
    out.push_str(&cells_text(CellKind::Minimal, &desc.minimal_cells));
    out.push_str(&cells_text(CellKind::Maximal, &desc.maximal_cells));
    if desc.solvable {
        out.push_str(
            "solution set: union of the order intervals between each minimal and maximal point above it\n",
        );
    }
    out
}

pub fn description_json(desc: &SolutionSetDescription) -> Value {
    let shortcuts: Vec<Value> = desc
        .shortcuts
        .iter()
        .map(|s| Value::String(s.tag().to_string()))
        .collect();
    json!({
        "solvable": desc.solvable,
        "shortcuts": shortcuts,
        "minimal_cells": Value::Array(desc.minimal_cells.iter().map(cell_json).collect()),
        "maximal_cells": Value::Array(desc.maximal_cells.iter().map(cell_json).collect()),
    })
}

pub fn report_text(report: &VerificationReport) -> String {
    let mut out = format!(
        "verification: {}\ncells checked: {}\ncell points checked: {}\ninterpolation trials: {}\nnon-solution probes: {}\n",
        if report.passed() { "PASS" } else { "FAIL" },
        report.cells_checked,
        report.points_checked,
        report.trials_run,
        report.probes_run,
    );
    if report.counterexamples.is_empty() {
        out.push_str("counterexamples: none\n");
    } else {
        out.push_str(&format!(
            "counterexamples: {}\n",
            report.counterexamples.len()
        ));
        for c in &report.counterexamples {
            out.push_str(&format!("  {c}\n"));
        }
    }
    out
}

pub fn report_json(report: &VerificationReport) -> Value {
    let counterexamples: Vec<Value> = report
        .counterexamples
        .iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("check".into(), Value::String(c.check.clone()));
            m.insert("point".into(), rat_strings(&c.point));
            m.insert("detail".into(), Value::String(c.detail.clone()));
            Value::Object(m)
        })
        .collect();
    json!({
        "passed": report.passed(),
        "cells_checked": report.cells_checked,
        "points_checked": report.points_checked,
        "trials": report.trials_run,
        "probes": report.probes_run,
        "counterexamples": counterexamples,
    })
}
