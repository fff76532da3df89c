//! JSON and CSV rendering. `serde_json::Map` keeps keys sorted, so output is
//! stable across runs.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use pathchain::inductive::GeneratingSet;
use pathchain::{Chain, Digraph, ExactMatrix, FaceMultihypergraph, HomologyReport, OmegaBasis, Scalar};

fn integer(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

fn scalar(x: &Scalar) -> Value {
    if x.is_integer() {
        integer(&x.to_integer())
    } else {
        Value::String(x.to_string())
    }
}

pub fn digraph(g: &Digraph) -> Value {
    let edges: Vec<Value> = g.edges().map(|(u, v)| json!([g.name(u), g.name(v)])).collect();
    json!({ "vertices": g.names(), "edges": edges })
}

pub fn chain(g: &Digraph, c: &Chain) -> Value {
    let terms: Vec<Value> = c
        .terms()
        .map(|(p, x)| {
            let names: Vec<&str> = p.iter().map(|&v| g.name(v)).collect();
            json!({ "coefficient": scalar(x), "path": names })
        })
        .collect();
    Value::Array(terms)
}

fn matrix(m: &ExactMatrix) -> Value {
    let entries: Vec<Value> = m.entries().map(|(r, c, x)| json!([r, c, scalar(x)])).collect();
    json!({ "rows": m.n_rows(), "cols": m.n_cols(), "entries": entries })
}

fn basis(g: &Digraph, b: &OmegaBasis) -> Value {
    Value::Array(b.chains().map(|c| chain(g, c)).collect())
}

pub fn report(g: &Digraph, r: &HomologyReport, with_boundaries: bool) -> Value {
    let torsion = match &r.torsion {
        Some(t) => Value::Array(t.iter().map(|fs| Value::Array(fs.iter().map(integer).collect())).collect()),
        None => Value::Null,
    };
    let mut out = json!({
        "digraph": digraph(g),
        "ring": r.ring.to_string(),
        "max_dim": r.max_dim,
        "truncated": r.truncated,
        "omega_dims": r.omega_dims,
        "betti": r.betti,
        "torsion": torsion,
        "euler": r.euler,
    });
    if with_boundaries {
        let bs: Vec<Value> = r
            .boundaries
            .iter()
            .enumerate()
            .map(|(n, m)| json!({ "dim": n, "matrix": matrix(m), "basis": basis(g, &r.bases[n]) }))
            .collect();
        out["boundaries"] = Value::Array(bs);
    }
    out
}

fn structure(g: &Digraph, f: &FaceMultihypergraph) -> Value {
    let vertices: Vec<Value> = f
        .vertices()
        .iter()
        .map(|v| json!({ "label": chain(g, &v.label), "basis_index": v.basis_index }))
        .collect();
    let decompositions: Vec<Value> = f
        .decompositions()
        .map(|((i, u), parts)| {
            json!({ "vertex": i, "anchor": g.name(u), "parts": parts.iter().map(|c| chain(g, c)).collect::<Vec<_>>() })
        })
        .collect();
    let hyperedges: Vec<Value> = f
        .hyperedges()
        .iter()
        .map(|h| {
            let slots: Vec<Value> = h.slots.iter().map(|s| json!([s.vertex, s.k])).collect();
            json!({ "anchor": g.name(h.anchor), "slots": slots })
        })
        .collect();
    json!({ "vertices": vertices, "decompositions": decompositions, "hyperedges": hyperedges })
}

pub fn generators(g: &Digraph, set: &GeneratingSet) -> Value {
    let elements: Vec<Value> = set
        .elements
        .iter()
        .map(|e| {
            json!({
                "chain": chain(g, &e.chain),
                "extension_vertex": g.name(e.extension_vertex),
                "structure": structure(g, &e.structure),
            })
        })
        .collect();
    let certificates: Vec<Value> = set
        .certificates
        .iter()
        .map(|c| {
            json!({
                "block": [g.name(c.block.0), g.name(c.block.1)],
                "omega_rank": c.omega_rank,
                "generator_rank": c.generator_rank,
                "lattice_equal": c.lattice_equal,
                "basis_lattice_equal": c.basis_lattice_equal,
            })
        })
        .collect();
    json!({
        "dimension": set.dimension,
        "ring": set.ring.to_string(),
        "direction": set.direction.to_string(),
        "spans": set.spans,
        "grounded": set.grounded,
        "basis": set.basis,
        "certificates": certificates,
        "elements": elements,
    })
}

pub fn csv(r: &HomologyReport) -> String {
    let mut out = String::from("dim,omega,betti\n");
    for (n, (d, b)) in r.omega_dims.iter().zip(&r.betti).enumerate() {
        out.push_str(&format!("{n},{d},{b}\n"));
    }
    out
}
