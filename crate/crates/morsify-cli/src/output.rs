//! Deterministic renderers. JSON goes through `serde_json::Value`, whose
//! default map keeps keys sorted, and every list is emitted in canonical
//! order, so identical invocations produce identical bytes. Counts are
//! emitted as exact JSON integers (arbitrary precision), rationals as
//! `p/q` strings.

use morsify::{
    AdjacencyGraph, Comparison, ComponentType, CellValue, Count, MorseTable, Rat, Series,
    VerificationReport,
};
use serde_json::{Map, Number, Value};

fn factorial(k: usize) -> Count {
    (2..=k).fold(Count::from(1), |f, i| f * Count::from(i))
}

fn pretty(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("string-keyed value tree")
}

fn obj(entries: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in entries {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

/// Exact integer as a JSON number of arbitrary size.
fn big(v: &Count) -> Value {
    Value::Number(
        v.to_string()
            .parse::<Number>()
            .expect("integer literal is a valid JSON number"),
    )
}

fn cell_text(value: &CellValue) -> String {
    match value {
        CellValue::Known(v) => v.to_string(),
        CellValue::Unknown => "?".to_string(),
    }
}

pub fn table_json(table: &MorseTable) -> String {
    let cells: Vec<Value> = table
        .cells()
        .iter()
        .map(|c| {
            obj(vec![
                ("n", Value::from(c.n)),
                ("l", Value::from(c.l)),
                ("provenance", s(c.provenance.as_str())),
                (
                    "value",
                    match &c.value {
                        CellValue::Known(v) => big(v),
                        CellValue::Unknown => Value::Null,
                    },
                ),
            ])
        })
        .collect();
    pretty(obj(vec![
        ("n_min", Value::from(table.n_min())),
        ("n_max", Value::from(table.n_max())),
        ("l_max", Value::from(table.l_max())),
        ("cells", Value::Array(cells)),
    ]))
}

pub fn table_markdown(table: &MorseTable) -> String {
    let mut out = String::new();
    out.push_str("| n\\l |");
    for l in 0..=table.l_max() {
        out.push_str(&format!(" {l} |"));
    }
    out.push('\n');
    out.push_str("| --- |");
    for _ in 0..=table.l_max() {
        out.push_str(" --- |");
    }
    out.push('\n');
    for n in (table.n_min()..=table.n_max()).rev() {
        out.push_str(&format!("| {n} |"));
        for l in 0..=table.l_max() {
            let cell = table.get(n, l).expect("cell inside the window");
            out.push_str(&format!(" {} |", cell_text(&cell.value)));
        }
        out.push('\n');
    }
    out
}

pub fn table_csv(table: &MorseTable) -> String {
    let mut out = String::new();
    out.push_str("n\\l");
    for l in 0..=table.l_max() {
        out.push_str(&format!(",{l}"));
    }
    out.push('\n');
    for n in (table.n_min()..=table.n_max()).rev() {
        out.push_str(&n.to_string());
        for l in 0..=table.l_max() {
            let cell = table.get(n, l).expect("cell inside the window");
            out.push_str(&format!(",{}", cell_text(&cell.value)));
        }
        out.push('\n');
    }
    out
}

pub fn count_json(n: u32, l: u32, backend: &str, count: &Count) -> String {
    pretty(obj(vec![
        ("n", Value::from(n)),
        ("l", Value::from(l)),
        ("backend", s(backend)),
        ("count", big(count)),
    ]))
}

fn component_value(ct: &ComponentType) -> Value {
    let assignment: Vec<Value> = ct.assignment().iter().map(|&k| Value::from(k)).collect();
    let mut ranks = Map::new();
    for i in 1..ct.n() {
        ranks.insert(format!("c{i}"), Value::from(ct.critical_rank(i)));
    }
    for j in 1..=ct.l() {
        ranks.insert(format!("v{j}"), Value::from(ct.boundary_rank(j)));
    }
    obj(vec![
        ("id", s(ct.canonical_id())),
        ("assignment", Value::Array(assignment)),
        ("ranks", Value::Object(ranks)),
    ])
}

pub fn components_json(n: u32, l: u32, components: &[ComponentType]) -> String {
    pretty(obj(vec![
        ("n", Value::from(n)),
        ("l", Value::from(l)),
        ("count", Value::from(components.len())),
        (
            "components",
            Value::Array(components.iter().map(component_value).collect()),
        ),
    ]))
}

pub fn components_markdown(n: u32, l: u32, components: &[ComponentType]) -> String {
    let mut out = format!("# components of ({n}, {l})\n\ncount: {}\n\n", components.len());
    for ct in components {
        out.push_str(&format!("- {}\n", ct.canonical_id()));
    }
    out
}

pub fn graph_json(graph: &AdjacencyGraph) -> String {
    let ids: Vec<String> = graph.nodes().iter().map(|c| c.canonical_id()).collect();
    let edges: Vec<Value> = graph
        .edges()
        .iter()
        .map(|&(u, v, w)| Value::Array(vec![s(&ids[u]), s(&ids[v]), s(w.tag())]))
        .collect();
    let mut exterior = Map::new();
    for (idx, contacts) in graph.exterior().iter().enumerate() {
        if !contacts.is_empty() {
            exterior.insert(
                ids[idx].clone(),
                Value::Array(contacts.iter().map(|&c| Value::from(c)).collect()),
            );
        }
    }
    pretty(obj(vec![
        ("n", Value::from(graph.n())),
        ("l", Value::from(graph.l())),
        ("node_count", Value::from(graph.node_count())),
        ("connected", Value::Bool(graph.is_connected())),
        ("nodes", Value::Array(ids.iter().map(|i| s(i)).collect())),
        ("edges", Value::Array(edges)),
        ("exterior", Value::Object(exterior)),
    ]))
}

pub fn graph_markdown(graph: &AdjacencyGraph) -> String {
    let ids: Vec<String> = graph.nodes().iter().map(|c| c.canonical_id()).collect();
    let mut out = format!(
        "# wall graph of ({}, {})\n\nnodes: {}\nedges: {}\nconnected: {}\n",
        graph.n(),
        graph.l(),
        graph.node_count(),
        graph.edges().len(),
        if graph.is_connected() { "yes" } else { "no" },
    );
    if !graph.edges().is_empty() {
        out.push_str("\n## edges\n\n");
        for &(u, v, w) in graph.edges() {
            out.push_str(&format!("- {} -- {} [{}]\n", ids[u], ids[v], w.tag()));
        }
    }
    if graph.exterior().iter().any(|c| !c.is_empty()) {
        out.push_str("\n## exterior caustic contacts\n\n");
        for (idx, contacts) in graph.exterior().iter().enumerate() {
            if !contacts.is_empty() {
                let list = contacts
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ");
                out.push_str(&format!("- {}: {list}\n", ids[idx]));
            }
        }
    }
    out
}

fn scaled(coeff: &Rat, k: usize) -> Rat {
    coeff.clone() * Rat::from_integer(factorial(k))
}

fn scaled_count(coeff: &Rat, k: usize) -> Value {
    let r = scaled(coeff, k);
    debug_assert!(r.is_integer(), "table column scales to integers");
    big(&r.to_integer())
}

pub fn egf_json(
    l: u32,
    order: usize,
    k3_prefactor: i64,
    table_col: &Series,
    closed: Option<&Series>,
    comparison: Option<&Comparison>,
) -> String {
    let table: Vec<Value> = (0..=order).map(|k| s(table_col.coeff(k))).collect();
    let scaled_values: Vec<Value> = (0..=order)
        .map(|k| scaled_count(table_col.coeff(k), k))
        .collect();
    let closed_values = match closed {
        Some(series) => Value::Array((0..=order).map(|k| s(series.coeff(k))).collect()),
        None => Value::Null,
    };
    let comparison_value = match comparison {
        None => Value::Null,
        Some(Comparison::Equal) => s("equal"),
        Some(Comparison::FirstMismatch { index, lhs, rhs }) => obj(vec![
            ("index", Value::from(*index)),
            ("closed", s(scaled(lhs, *index))),
            ("table", s(scaled(rhs, *index))),
        ]),
    };
    pretty(obj(vec![
        ("l", Value::from(l)),
        ("order", Value::from(order)),
        ("k3_prefactor", Value::from(k3_prefactor)),
        ("table", Value::Array(table)),
        ("scaled", Value::Array(scaled_values)),
        ("closed", closed_values),
        ("comparison", comparison_value),
    ]))
}

pub fn egf_markdown(
    l: u32,
    order: usize,
    k3_prefactor: i64,
    table_col: &Series,
    closed: Option<&Series>,
    comparison: Option<&Comparison>,
) -> String {
    let mut out = format!("# column generating function, l = {l}, order {order}\n\n");
    match closed {
        Some(series) => {
            out.push_str("| n | K_n^l | coefficient | closed coefficient |\n");
            out.push_str("| --- | --- | --- | --- |\n");
            for k in 0..=order {
                out.push_str(&format!(
                    "| {k} | {} | {} | {} |\n",
                    scaled(table_col.coeff(k), k),
                    table_col.coeff(k),
                    series.coeff(k),
                ));
            }
        }
        None => {
            out.push_str("| n | K_n^l | coefficient |\n");
            out.push_str("| --- | --- | --- |\n");
            for k in 0..=order {
                out.push_str(&format!(
                    "| {k} | {} | {} |\n",
                    scaled(table_col.coeff(k), k),
                    table_col.coeff(k),
                ));
            }
        }
    }
    let label = if l == 3 {
        format!("closed form (prefactor {k3_prefactor})")
    } else {
        "closed form".to_string()
    };
    out.push('\n');
    match comparison {
        None => out.push_str(&format!("no closed form at l = {l}; table column only\n")),
        Some(Comparison::Equal) => {
            out.push_str(&format!("{label}: matches the table through t^{order}\n"))
        }
        Some(Comparison::FirstMismatch { index, lhs, rhs }) => out.push_str(&format!(
            "{label}: first mismatch at n = {index} (closed {}, table {}, values scaled by n!)\n",
            scaled(lhs, *index),
            scaled(rhs, *index),
        )),
    }
    out
}

pub fn report_json(report: &VerificationReport) -> String {
    let mut params = Map::new();
    for (k, v) in &report.meta.parameters {
        params.insert(k.clone(), s(v));
    }
    let meta = obj(vec![
        ("parameters", Value::Object(params)),
        (
            "timestamp",
            report.meta.timestamp.map(Value::from).unwrap_or(Value::Null),
        ),
    ]);
    let sections: Vec<Value> = report
        .sections
        .iter()
        .map(|sec| {
            let details: Vec<Value> = sec
                .details
                .iter()
                .map(|m| {
                    obj(vec![
                        ("location", s(&m.location)),
                        ("left", s(&m.lhs)),
                        ("right", s(&m.rhs)),
                    ])
                })
                .collect();
            obj(vec![
                ("claim", s(&sec.claim_id)),
                ("anchor", s(&sec.anchor)),
                ("status", s(sec.status.as_str())),
                ("notes", Value::Array(sec.notes.iter().map(|n| s(n)).collect())),
                ("details", Value::Array(details)),
            ])
        })
        .collect();
    pretty(obj(vec![
        ("meta", meta),
        ("sections", Value::Array(sections)),
        ("gated_failure", Value::Bool(report.has_gated_failure())),
    ]))
}

pub fn report_markdown(report: &VerificationReport) -> String {
    let mut out = String::from("# verification report\n\n");
    for (k, v) in &report.meta.parameters {
        out.push_str(&format!("- {k}: {v}\n"));
    }
    if let Some(stamp) = report.meta.timestamp {
        out.push_str(&format!("- generated-at: {stamp}\n"));
    }
    for sec in &report.sections {
        out.push_str(&format!("\n## {}: {}\n\n", sec.claim_id, sec.status.as_str()));
        out.push_str(&format!("anchor: `{}`\n\n", sec.anchor));
        for note in &sec.notes {
            out.push_str(&format!("- {note}\n"));
        }
        if !sec.details.is_empty() {
            out.push_str("\n### mismatches\n\n| location | left | right |\n| --- | --- | --- |\n");
            for m in &sec.details {
                out.push_str(&format!("| {} | {} | {} |\n", m.location, m.lhs, m.rhs));
            }
        }
    }
    out.push_str(&format!(
        "\ngated failures: {}\n",
        if report.has_gated_failure() {
            "present"
        } else {
            "none"
        }
    ));
    out
}
