//! `analyze` output: a key/value listing and a single CSV row.
//!
//! CSV columns, in order:
//!
//! `name,order,min_degree,max_degree,regular,connected,diameter,girth,
//! aspl_num,aspl_den,aspl,moore_bound,moore_ratio_pct,aspl_lower_num,aspl_lower_den`
//!
//! Fractions are reduced. Cells that do not apply (no finite diameter, an
//! acyclic graph, degree below 2) are left empty.

use golfnet::bounds::{aspl_lower_bound, moore_bound, moore_ratio, percent};
use golfnet::scalar::render_significant;
use golfnet::{BigCount, Fraction, Graph, MetricsReport};
use std::fmt::Write as _;

pub const CSV_HEADER: &str = "name,order,min_degree,max_degree,regular,connected,diameter,girth,\
aspl_num,aspl_den,aspl,moore_bound,moore_ratio_pct,aspl_lower_num,aspl_lower_den";

pub struct Analysis {
    pub metrics: MetricsReport,
    pub aspl: Option<Fraction>,
    pub moore_bound: Option<BigCount>,
    pub moore_ratio_pct: Option<String>,
    pub aspl_lower: Option<Fraction>,
}

pub fn analyze(g: &Graph) -> Analysis {
    let metrics = g.metrics();
    let aspl = metrics.aspl().map(|a| a.ratio());
    let delta = metrics.max_degree as u32;
    let order = metrics.order as u64;
    let (moore_bound, moore_ratio_pct) = match metrics.diameter {
        Some(d) if d >= 1 && delta >= 2 => (
            moore_bound::<BigCount>(delta, d).ok(),
            moore_ratio::<BigCount>(order, delta, d)
                .ok()
                .map(|r| percent(&r)),
        ),
        _ => (None, None),
    };
    let aspl_lower =
        if metrics.is_connected && order >= 2 && metrics.max_degree == metrics.order - 1 {
            Some(Fraction::from_integer(1))
        } else {
            aspl_lower_bound::<u64>(order, delta.into()).ok()
        };
    Analysis {
        metrics,
        aspl,
        moore_bound,
        moore_ratio_pct,
        aspl_lower,
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

fn decimal(f: &Fraction) -> String {
    render_significant(f.numer(), f.denom(), 6)
}

impl Analysis {
    pub fn gap(&self) -> Option<Fraction> {
        Some(self.aspl? - self.aspl_lower?)
    }

    pub fn text(&self) -> String {
        let m = &self.metrics;
        let na = || "n/a".to_string();
        let frac = |f: &Option<Fraction>| {
            f.map(|f| format!("{f} ({})", decimal(&f)))
                .unwrap_or_else(na)
        };
        let mut out = String::new();
        let _ = writeln!(out, "order: {}", m.order);
        let _ = writeln!(out, "min_degree: {}", m.min_degree);
        let _ = writeln!(out, "max_degree: {}", m.max_degree);
        let _ = writeln!(out, "regular: {}", m.is_regular);
        let _ = writeln!(out, "connected: {}", m.is_connected);
        let _ = writeln!(
            out,
            "diameter: {}",
            m.diameter
                .map(|d| d.to_string())
                .unwrap_or_else(|| "inf".into())
        );
        let _ = writeln!(
            out,
            "girth: {}",
            m.girth
                .map(|d| d.to_string())
                .unwrap_or_else(|| "inf".into())
        );
        let _ = writeln!(out, "aspl: {}", frac(&self.aspl));
        let _ = writeln!(
            out,
            "moore_bound: {}",
            self.moore_bound
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_else(na)
        );
        let _ = writeln!(
            out,
            "moore_ratio: {}",
            self.moore_ratio_pct
                .as_ref()
                .map(|p| format!("{p}%"))
                .unwrap_or_else(na)
        );
        let _ = writeln!(out, "aspl_lower_bound: {}", frac(&self.aspl_lower));
        let _ = writeln!(out, "aspl_gap: {}", frac(&self.gap()));
        out
    }

    pub fn csv_row(&self, name: &str) -> String {
        let m = &self.metrics;
        let cells = [
            name.replace([',', '\n'], "_"),
            m.order.to_string(),
            m.min_degree.to_string(),
            m.max_degree.to_string(),
            m.is_regular.to_string(),
            m.is_connected.to_string(),
            opt(&m.diameter),
            opt(&m.girth),
            opt(&self.aspl.map(|a| *a.numer())),
            opt(&self.aspl.map(|a| *a.denom())),
            self.aspl.as_ref().map(decimal).unwrap_or_default(),
            opt(&self.moore_bound),
            opt(&self.moore_ratio_pct),
            opt(&self.aspl_lower.map(|a| *a.numer())),
            opt(&self.aspl_lower.map(|a| *a.denom())),
        ];
        cells.join(",")
    }
}
