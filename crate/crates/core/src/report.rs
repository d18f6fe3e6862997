//! Method dispatch and convergence records, with CSV and table rendering.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use rayon::prelude::*;

use crate::arcbit::{arc_bit_sum, gap_bound, ArcBitGrid};
use crate::correction::{corrected_pi, transformed_bound, transformed_pi, uncorrected_bound, CorrectionRule};
use crate::error::{domain, Error, Result};
use crate::leibniz::{transmutation_arctan, Integrand, QuadratureSpec};
use crate::precision::{arctan_reference, int, sin_reference, ExactRational};
use crate::scalar::Real;
use crate::series::arctan_partial;
use crate::trig::{sine_estimate, taylor_remainder, versine_estimate, versine_reference};

pub const CSV_HEADER: [&str; 5] = ["method", "param", "estimate", "abs_error", "bound"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Arc-bit sum on an `n`-point grid.
    Arcbit,
    /// arctan partial sum with `param` terms.
    Series,
    /// `param` terms plus an end correction.
    Corrected(CorrectionRule),
    /// Transformed series through index `param`.
    Transformed,
    /// Transmutation area with `param` trapezoid panels.
    Leibniz,
    /// Sine polynomial after `param` refinements.
    Sine,
    /// Versine polynomial with `param` terms.
    Versine,
}

impl Method {
    pub const NAMES: [&'static str; 7] =
        ["arcbit", "series", "corrected", "transformed", "leibniz", "sine", "versine"];

    /// Every method, with `corrected` expanded over all rules.
    pub fn full_set() -> Vec<Method> {
        let mut all = vec![Method::Arcbit, Method::Series];
        all.extend(CorrectionRule::ALL.iter().map(|&r| Method::Corrected(r)));
        all.extend([Method::Transformed, Method::Leibniz, Method::Sine, Method::Versine]);
        all
    }

    /// Resolves a bare method name, taking the rule for `corrected` from
    /// `rule` unless the name carries one as `corrected:<rule>`.
    pub fn resolve(name: &str, rule: Option<CorrectionRule>) -> Result<Method> {
        match name.split_once(':') {
            Some(("corrected", r)) => Ok(Method::Corrected(r.parse()?)),
            Some(_) => Err(Error::Unknown {
                kind: "method",
                name: name.to_string(),
            }),
            None if name == "corrected" => rule.map(Method::Corrected).ok_or_else(|| {
                domain("corrected", "a correction rule is required")
            }),
            None => name.parse(),
        }
    }

    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Arcbit => f.write_str("arcbit"),
            Method::Series => f.write_str("series"),
            Method::Corrected(r) => write!(f, "corrected:{r}"),
            Method::Transformed => f.write_str("transformed"),
            Method::Leibniz => f.write_str("leibniz"),
            Method::Sine => f.write_str("sine"),
            Method::Versine => f.write_str("versine"),
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "arcbit" => Ok(Method::Arcbit),
            "series" => Ok(Method::Series),
            "transformed" => Ok(Method::Transformed),
            "leibniz" => Ok(Method::Leibniz),
            "sine" => Ok(Method::Sine),
            "versine" => Ok(Method::Versine),
            _ if s.starts_with("corrected:") => Method::resolve(s, None),
            _ => Err(Error::Unknown {
                kind: "method",
                name: s.to_string(),
            }),
        }
    }
}

/// Method-specific inputs beyond the main parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodOptions {
    /// Upper limit for arcbit, series and leibniz, in `[0, 1]`.
    pub x: ExactRational,
    /// Angle for sine and versine.
    pub angle: ExactRational,
}

impl Default for MethodOptions {
    fn default() -> Self {
        Self {
            x: int(1),
            angle: int(1),
        }
    }
}

/// One row of a convergence table.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRecord<R> {
    pub method: String,
    pub param: u64,
    pub estimate: R,
    pub abs_error: R,
    pub bound: Option<R>,
}

/// Evaluates `method` at `param` and measures it against the reference value
/// of its target: `arctan(x)` for the π/4 routes, `sin(s)` and `1 − cos(s)`
/// for the trigonometric ones.
pub fn estimate<R: Real>(method: Method, param: u64, opts: &MethodOptions, ctx: &R::Context) -> Result<ConvergenceRecord<R>> {
    if param == 0 {
        return Err(domain("estimate", "parameter must be at least 1"));
    }
    let x = R::from_rational(&opts.x, ctx);
    let angle = R::from_rational(&opts.angle, ctx);
    let is_octant = opts.x == int(1);
    let target = || arctan_reference(&x, ctx);
    let (estimate, truth, bound) = match method {
        Method::Arcbit => {
            let grid = ArcBitGrid::new(param, opts.x.clone())?;
            let bound = if is_octant && param >= 2 { Some(gap_bound(param, ctx)?) } else { None };
            (arc_bit_sum(&grid, ctx)?, target()?, bound)
        }
        Method::Series => {
            let state = arctan_partial(&x, param - 1, ctx)?;
            (state.partial_sum, target()?, Some(state.remainder_bound))
        }
        Method::Corrected(rule) => {
            let bound = (rule == CorrectionRule::None).then(|| R::from_rational(&uncorrected_bound(param), ctx));
            (corrected_pi(param, rule, ctx)?, arctan_reference(&R::one(), ctx)?, bound)
        }
        Method::Transformed => (
            transformed_pi(param, ctx),
            arctan_reference(&R::one(), ctx)?,
            Some(R::from_rational(&transformed_bound(param), ctx)),
        ),
        Method::Leibniz => {
            let spec = QuadratureSpec::trapezoid(R::zero(), x.clone(), param)?;
            let bound = spec.error_bound(Integrand::SquareRatio, ctx);
            (transmutation_arctan(&x, param, ctx)?, target()?, bound)
        }
        Method::Sine => {
            let k = iterations(param)?;
            (
                sine_estimate(&angle, k, ctx)?,
                sin_reference(&angle, ctx)?,
                Some(taylor_remainder(&angle, 2 * k + 3, ctx)),
            )
        }
        Method::Versine => {
            let k = iterations(param)?;
            (
                versine_estimate(&angle, k, ctx)?,
                versine_reference(&angle, ctx)?,
                Some(taylor_remainder(&angle, 2 * k + 2, ctx)),
            )
        }
    };
    let abs_error = (estimate.clone() - truth).abs();
    Ok(ConvergenceRecord {
        method: method.label(),
        param,
        estimate,
        abs_error,
        bound,
    })
}

fn iterations(param: u64) -> Result<u32> {
    u32::try_from(param).map_err(|_| domain("estimate", format!("{param} iterations is too many")))
}

/// Every `(method, param)` cell, evaluated in parallel and returned
/// method-major in input order.
pub fn compare<R: Real>(methods: &[Method], params: &[u64], opts: &MethodOptions, ctx: &R::Context) -> Result<Vec<ConvergenceRecord<R>>> {
    if methods.is_empty() || params.is_empty() {
        return Err(domain("compare", "methods and params must be nonempty"));
    }
    let cells: Vec<(Method, u64)> = methods
        .iter()
        .flat_map(|&m| params.iter().map(move |&p| (m, p)))
        .collect();
    cells
        .into_par_iter()
        .map(|(m, p)| estimate(m, p, opts, ctx))
        .collect()
}

impl<R: Real> ConvergenceRecord<R> {
    fn fields(&self) -> [String; 5] {
        [
            self.method.clone(),
            self.param.to_string(),
            self.estimate.to_string(),
            self.abs_error.to_string(),
            self.bound.as_ref().map(ToString::to_string).unwrap_or_default(),
        ]
    }
}

/// Writes the header and one row per record, `\n`-terminated.
pub fn write_csv<R: Real, W: Write>(records: &[ConvergenceRecord<R>], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let io = |e: csv::Error| Error::Record(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in records {
        w.write_record(r.fields()).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Record(e.to_string()))
}

pub fn to_csv_string<R: Real>(records: &[ConvergenceRecord<R>]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(records, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Record(e.to_string()))
}

/// Parses output of [`write_csv`]; the header must match exactly.
pub fn read_csv<R, In>(input: In) -> Result<Vec<ConvergenceRecord<R>>>
where
    R: Real + FromStr,
    In: Read,
{
    let mut rd = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let bad = |e: csv::Error| Error::Record(e.to_string());
    let header = rd.headers().map_err(bad)?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Record(format!("unexpected header {header:?}")));
    }
    let num = |s: &str| s.parse::<R>().map_err(|_| Error::Parse(s.to_string()));
    rd.records()
        .map(|row| {
            let row = row.map_err(bad)?;
            if row.len() != 5 {
                return Err(Error::Record(format!("expected 5 fields, got {}", row.len())));
            }
            Ok(ConvergenceRecord {
                method: row[0].to_string(),
                param: row[1].parse().map_err(|_| Error::Parse(row[1].to_string()))?,
                estimate: num(&row[2])?,
                abs_error: num(&row[3])?,
                bound: if row[4].is_empty() { None } else { Some(num(&row[4])?) },
            })
        })
        .collect()
}

/// Space-aligned table with the same columns as the CSV.
pub fn render_table<R: Real>(records: &[ConvergenceRecord<R>]) -> String {
    let rows: Vec<[String; 5]> = std::iter::once(CSV_HEADER.map(String::from))
        .chain(records.iter().map(|r| {
            let mut f = r.fields();
            if f[4].is_empty() {
                f[4] = "-".into();
            }
            f
        }))
        .collect();
    let widths: Vec<usize> = (0..5)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::{rat, BigReal, Precision};

    fn ctx() -> Precision {
        Precision::new(30)
    }

    fn est(m: Method, p: u64) -> ConvergenceRecord<BigReal> {
        estimate(m, p, &MethodOptions::default(), &ctx()).unwrap()
    }

    #[test]
    fn estimate_examples() {
        let r = est(Method::Series, 5);
        assert!(r.estimate.to_string().starts_with("0.83492063"));
        assert_eq!(r.bound.unwrap(), BigReal::from_ratio(1, 11, ctx()).unwrap());
        let r = est(Method::Corrected(CorrectionRule::Cf1), 1);
        assert_eq!(r.estimate, BigReal::from_ratio(3, 4, ctx()).unwrap());
        let r = est(Method::Arcbit, 1);
        assert!(r.estimate.to_string().starts_with("0.70710678"));
        assert!(r.bound.is_none());
        assert!(estimate::<BigReal>(Method::Series, 0, &MethodOptions::default(), &ctx()).is_err());
    }

    #[test]
    fn errors_within_bounds() {
        for m in Method::full_set() {
            for p in [3u64, 20] {
                let r = est(m, p);
                if let Some(b) = &r.bound {
                    assert!(r.abs_error <= *b, "{} {p}", r.method);
                }
            }
        }
    }

    #[test]
    fn method_names() {
        assert_eq!("corrected:cf3".parse::<Method>().unwrap(), Method::Corrected(CorrectionRule::Cf3));
        assert_eq!(Method::resolve("corrected", Some(CorrectionRule::Cf2)).unwrap(), Method::Corrected(CorrectionRule::Cf2));
        assert!(Method::resolve("corrected", None).is_err());
        assert!("corrected:cf9".parse::<Method>().is_err());
        assert!("madhava".parse::<Method>().is_err());
        for m in Method::full_set() {
            assert_eq!(m.label().parse::<Method>().unwrap(), m);
        }
    }

    #[test]
    fn compare_orders_rows() {
        let methods = [Method::Series, Method::Corrected(CorrectionRule::Cf3)];
        let rows: Vec<ConvergenceRecord<BigReal>> =
            compare(&methods, &[10, 100], &MethodOptions::default(), &ctx()).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].method, "series");
        assert_eq!(rows[3].method, "corrected:cf3");
        assert!(rows[2].abs_error < rows[0].abs_error);
        assert!(rows[3].abs_error < rows[1].abs_error);
    }

    #[test]
    fn csv_round_trip() {
        let rows: Vec<ConvergenceRecord<BigReal>> = compare(
            &Method::full_set(),
            &[1, 4],
            &MethodOptions {
                x: int(1),
                angle: rat(3, 4),
            },
            &ctx(),
        )
        .unwrap();
        let text = to_csv_string(&rows).unwrap();
        assert!(text.starts_with("method,param,estimate,abs_error,bound\n"));
        assert!(!text.contains('\r'));
        assert!(text.lines().any(|l| l.ends_with(',')), "arcbit n=1 has no bound");
        let back: Vec<ConvergenceRecord<BigReal>> = read_csv(text.as_bytes()).unwrap();
        assert_eq!(back, rows);
        assert_eq!(to_csv_string(&back).unwrap(), text);
    }

    #[test]
    fn csv_rejects_bad_input() {
        assert!(read_csv::<BigReal, _>("a,b,c,d,e\n".as_bytes()).is_err());
        let bad = "method,param,estimate,abs_error,bound\nseries,x,1,0,\n";
        assert!(read_csv::<BigReal, _>(bad.as_bytes()).is_err());
    }

    #[test]
    fn table_has_header_and_rows() {
        let t = render_table(&[est(Method::Transformed, 2)]);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("method"));
        assert!(lines[1].starts_with("transformed"));
    }
}
