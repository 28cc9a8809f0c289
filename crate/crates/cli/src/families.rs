//! Parsing of `gen` family arguments into graphs plus their predictions.

use golfnet::algebra::{prime_power, ring_max_degree, ring_point_count};
use golfnet::constructions::{
    brown_field, brown_ring, duplicate_vertices, g8, kg8, kkg8, DuplicationPlan,
};
use golfnet::generators::Family;
use golfnet::{Error, Graph, Result};

/// Expected parameters of a generated graph. Degree and diameter are upper
/// bounds when `exact` is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicted {
    pub order: u64,
    pub max_degree: u64,
    pub diameter: Option<u32>,
    pub exact: bool,
}

pub struct Generated {
    pub label: String,
    pub graph: Graph,
    pub predicted: Predicted,
}

pub struct DupOptions {
    pub target: Option<usize>,
    pub copies: Option<usize>,
    pub clique: bool,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

fn numbers<const N: usize>(family: &str, args: &[String]) -> Result<[u32; N]> {
    if args.len() != N {
        return Err(usage(format!(
            "{family} takes {N} integer parameter(s), got {}",
            args.len()
        )));
    }
    let mut out = [0u32; N];
    for (slot, arg) in out.iter_mut().zip(args) {
        *slot = arg
            .parse()
            .map_err(|_| usage(format!("{family}: {arg:?} is not a non-negative integer")))?;
    }
    Ok(out)
}

fn from_family(family: Family) -> Result<(Graph, Predicted)> {
    let p = family.params();
    let exact = !matches!(family, Family::DeBruijn { .. });
    Ok((
        family.build()?,
        Predicted {
            order: p.predicted_order as u64,
            max_degree: p.predicted_max_degree as u64,
            diameter: (p.predicted_order >= 2).then_some(p.predicted_diameter),
            exact,
        },
    ))
}

/// Builds the family named by `args[0]` with the parameters that follow.
pub fn generate(args: &[String], dup: &DupOptions) -> Result<Generated> {
    let (name, rest) = args
        .split_first()
        .ok_or_else(|| usage("missing family name"))?;
    let (graph, predicted) = match name.as_str() {
        "petersen" => {
            numbers::<0>(name, rest)?;
            from_family(Family::Petersen)?
        }
        "hypercube" => {
            let [n] = numbers(name, rest)?;
            from_family(Family::Hypercube { n })?
        }
        "torus" => {
            let [m, n] = numbers(name, rest)?;
            from_family(Family::Torus { m, n })?
        }
        "debruijn" => {
            let [t, n] = numbers(name, rest)?;
            from_family(Family::DeBruijn { t, n })?
        }
        "complete" => {
            let [n] = numbers(name, rest)?;
            from_family(Family::Complete { n })?
        }
        "cycle" => {
            let [n] = numbers(name, rest)?;
            from_family(Family::Cycle { n })?
        }
        "g8" => {
            numbers::<0>(name, rest)?;
            let predicted = Predicted {
                order: 8,
                max_degree: 3,
                diameter: Some(2),
                exact: true,
            };
            (g8(), predicted)
        }
        "brown-f" => {
            let [q] = numbers(name, rest)?;
            if prime_power(q.into()).is_none() {
                return Err(usage(format!("brown-f: {q} is not a prime power")));
            }
            let q64 = u64::from(q);
            let predicted = Predicted {
                order: q64 * q64 + q64 + 1,
                max_degree: q64 + 1,
                diameter: Some(2),
                exact: true,
            };
            (brown_field(q)?, predicted)
        }
        "brown-z" => {
            let [n] = numbers(name, rest)?;
            if n < 2 {
                return Err(usage("brown-z needs n >= 2"));
            }
            let predicted = Predicted {
                order: ring_point_count(n.into())?,
                max_degree: ring_max_degree(n.into())?,
                diameter: Some(2),
                exact: true,
            };
            (brown_ring(n)?, predicted)
        }
        "kg8" => {
            let [n] = numbers(name, rest)?;
            let n64 = u64::from(n);
            let predicted = Predicted {
                order: 8 * n64,
                max_degree: n64 + 2,
                diameter: (n >= 3).then_some(2),
                exact: true,
            };
            (kg8(n)?, predicted)
        }
        "kkg8" => {
            let [a, b] = numbers(name, rest)?;
            let (a64, b64) = (u64::from(a), u64::from(b));
            let graph = kkg8(a, b)?;
            let predicted = Predicted {
                order: 8 * a64 * b64,
                max_degree: 4 * a64 + b64 - 2,
                diameter: (a >= 2).then_some(2),
                exact: true,
            };
            (graph, predicted)
        }
        "dup" => {
            let copies = dup.copies.ok_or_else(|| usage("dup needs --delta"))?;
            let base = generate(
                rest,
                &DupOptions {
                    target: None,
                    copies: None,
                    clique: false,
                },
            )?;
            let base_max = base.graph.degree_stats().max as u64;
            let plan = DuplicationPlan {
                base: base.graph,
                target: dup.target,
                copies,
                clique: dup.clique,
            };
            let graph = duplicate_vertices(&plan)?;
            let predicted = Predicted {
                order: base.predicted.order + copies as u64,
                max_degree: base_max + copies as u64,
                diameter: Some(2),
                exact: false,
            };
            (graph, predicted)
        }
        other => return Err(usage(format!("unknown family {other:?}"))),
    };
    Ok(Generated {
        label: args.join(" "),
        graph,
        predicted,
    })
}
