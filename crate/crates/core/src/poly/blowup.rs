//! Blow-up charts of a codimension-one subscheme cut out by a linear
//! system `H · f = 0` with `H` of size `(n-1) x n`.
//!
//! Column indices are 0-based in this API.

use num_rational::BigRational;
use serde::Serialize;

use super::{MultiPoly, PolyMatrix, PolyRing};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Chart {
    /// `s = 1`, coordinate `t`.
    S,
    /// `t = 1`, coordinate `s`.
    T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupChart {
    pub column: usize,
    pub chart: Chart,
    /// Original variables plus the chart coordinate.
    pub ring: PolyRing,
    pub coordinate: String,
    /// One equation per column other than `column`, in column order.
    pub equations: Vec<MultiPoly>,
    /// `s*f_j - t*det H_j` with the chart variable set to 1.
    pub exceptional_equation: MultiPoly,
}

/// Outcome of re-deriving a chart from the original system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChartCheck {
    /// Remainders vanish and quotients equal the expected polynomials.
    pub exact: bool,
    /// The divisor was the zero polynomial, so only the vanishing of the
    /// residual could be checked.
    pub degenerate: bool,
}

fn check_shape(h: &PolyMatrix, f: &[MultiPoly]) -> Result<usize> {
    let n = f.len();
    if n < 2 || h.cols() != n || h.rows() != n - 1 {
        return Err(Error::DimensionMismatch(format!(
            "need an (n-1)xn matrix and n >= 2 polynomials, got {}x{} and {}",
            h.rows(),
            h.cols(),
            n
        )));
    }
    if f.iter().any(|p| p.ring() != h.ring()) {
        return Err(Error::DomainMismatch);
    }
    Ok(n)
}

fn without(f: &[MultiPoly], j: usize) -> Vec<MultiPoly> {
    f.iter()
        .enumerate()
        .filter(|&(i, _)| i != j)
        .map(|(_, p)| p.clone())
        .collect()
}

/// Residual `det(H_n) f' + f_n adj(H_n) h - adj(H_n) (H_n f' + f_n h)`,
/// where `H_n` drops the last column `h` and `f'` drops `f_n`. It is zero
/// for every input.
pub fn derive_adjoint_relation(h: &PolyMatrix, f: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
    let n = check_shape(h, f)?;
    let hn = h.remove_col(n - 1);
    let hcol = h.column(n - 1);
    let fp = &f[..n - 1];
    let fnn = &f[n - 1];
    let det = hn.determinant()?;
    let adj = hn.adjugate()?;
    let adj_h = adj.mul_vec(&hcol)?;
    let system: Vec<MultiPoly> = hn
        .mul_vec(fp)?
        .iter()
        .zip(&hcol)
        .map(|(a, b)| a + &(fnn * b))
        .collect();
    let adj_sys = adj.mul_vec(&system)?;
    Ok((0..n - 1)
        .map(|i| &(&(&det * &fp[i]) + &(fnn * &adj_h[i])) - &adj_sys[i])
        .collect())
}

struct ChartData {
    fp: Vec<MultiPoly>,
    fj: MultiPoly,
    det: MultiPoly,
    adj: PolyMatrix,
    adj_h: Vec<MultiPoly>,
}

fn chart_data(h: &PolyMatrix, f: &[MultiPoly], j: usize) -> Result<ChartData> {
    let n = check_shape(h, f)?;
    if j >= n {
        return Err(Error::InvalidIndex { index: j, len: n });
    }
    let hj = h.remove_col(j);
    let adj = hj.adjugate()?;
    let adj_h = adj.mul_vec(&h.column(j))?;
    Ok(ChartData {
        fp: without(f, j),
        fj: f[j].clone(),
        det: hj.determinant()?,
        adj,
        adj_h,
    })
}

fn lift(polys: &[MultiPoly], target: &PolyRing) -> Result<Vec<MultiPoly>> {
    polys.iter().map(|p| p.embed_into(target)).collect()
}

/// Equations of one affine chart of the blow-up along `(f_j, det H_j)`.
pub fn blowup_chart(f: &[MultiPoly], h: &PolyMatrix, j: usize, chart: Chart) -> Result<BlowupChart> {
    let data = chart_data(h, f, j)?;
    let base = h.ring();
    let (coordinate, ring) = match chart {
        Chart::S => {
            let t = base.fresh_name("t");
            let r = base.extend(&[&t])?;
            (t, r)
        }
        Chart::T => {
            let s = base.fresh_name("s");
            let r = base.extend(&[&s])?;
            (s, r)
        }
    };
    let c = ring.var(&coordinate)?;
    let fp = lift(&data.fp, &ring)?;
    let adj_h = lift(&data.adj_h, &ring)?;
    let fj = data.fj.embed_into(&ring)?;
    let det = data.det.embed_into(&ring)?;
    let (equations, exceptional_equation) = match chart {
        Chart::S => (
            fp.iter().zip(&adj_h).map(|(a, b)| a + &(&c * b)).collect(),
            &fj - &(&c * &det),
        ),
        Chart::T => (
            fp.iter().zip(&adj_h).map(|(a, b)| &(&c * a) + b).collect(),
            &(&c * &fj) - &det,
        ),
    };
    Ok(BlowupChart {
        column: j,
        chart,
        ring,
        coordinate,
        equations,
        exceptional_equation,
    })
}

/// Re-derives the chart from the system `H f = 0` by division.
///
/// S-chart: substitute `f_j = t det H_j` into `adj(H_j) H f`; each entry
/// must be divisible by `det H_j` with quotient the chart equation.
/// T-chart: `s adj(H_j) H f - det H_j * eq` must be divisible by the
/// exceptional equation with quotient `adj(H_j) h_j`.
pub fn verify_chart(chart: &BlowupChart, f: &[MultiPoly], h: &PolyMatrix) -> Result<ChartCheck> {
    let data = chart_data(h, f, chart.column)?;
    let ring = &chart.ring;
    let c = ring.var(&chart.coordinate)?;
    let hr = lift_matrix(h, ring)?;
    let adj = lift_matrix(&data.adj, ring)?;
    let mut fr = lift(f, ring)?;
    let det = data.det.embed_into(ring)?;
    let mut exact = true;
    let degenerate;
    match chart.chart {
        Chart::S => {
            fr[chart.column] = &c * &det;
            let residual = adj.mul_vec(&hr.mul_vec(&fr)?)?;
            degenerate = det.is_zero();
            for (res, eq) in residual.iter().zip(&chart.equations) {
                if degenerate {
                    exact &= res.is_zero();
                } else {
                    let (q, r) = res.div_rem(&det)?;
                    exact &= r.is_zero() && &q == eq;
                }
            }
        }
        Chart::T => {
            let sys = adj.mul_vec(&hr.mul_vec(&fr)?)?;
            let adj_h = lift(&data.adj_h, ring)?;
            degenerate = chart.exceptional_equation.is_zero();
            for ((s, eq), expect) in sys.iter().zip(&chart.equations).zip(&adj_h) {
                let residual = &(&c * s) - &(&det * eq);
                if degenerate {
                    exact &= residual.is_zero();
                } else {
                    let (q, r) = residual.div_rem(&chart.exceptional_equation)?;
                    exact &= r.is_zero() && &q == expect;
                }
            }
        }
    }
    Ok(ChartCheck { exact, degenerate })
}

fn lift_matrix(m: &PolyMatrix, target: &PolyRing) -> Result<PolyMatrix> {
    let rows = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).embed_into(target)).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    if rows.is_empty() {
        return Ok(PolyMatrix::zeros(target, 0, m.cols()));
    }
    PolyMatrix::from_rows(target, rows)
}

/// Sets the chart coordinate to a scalar, mostly for spot checks.
pub fn specialize_coordinate(chart: &BlowupChart, value: i64) -> Result<Vec<MultiPoly>> {
    let idx = chart.ring.var_index(&chart.coordinate).expect("coordinate in ring");
    let v = BigRational::from_integer(value.into());
    chart.equations.iter().map(|e| e.specialize(idx, &v)).collect()
}

#[cfg(test)]
mod tests {
    use super::super::CoeffDomain;
    use super::*;

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::new(CoeffDomain::Int, vars).unwrap()
    }

    #[test]
    fn adjoint_relation_n2() {
        let r = ring(&["h1", "h2", "f1", "f2"]);
        let h = PolyMatrix::parse(&r, &[&["h1", "h2"]]).unwrap();
        let f = vec![r.var("f1").unwrap(), r.var("f2").unwrap()];
        let res = derive_adjoint_relation(&h, &f).unwrap();
        assert!(res.iter().all(MultiPoly::is_zero));
    }

    #[test]
    fn adjoint_relation_zero_matrix() {
        let r = ring(&["x", "y", "z"]);
        let h = PolyMatrix::zeros(&r, 2, 3);
        let f: Vec<_> = ["x", "y", "z"].iter().map(|v| r.var(v).unwrap()).collect();
        assert!(derive_adjoint_relation(&h, &f).unwrap().iter().all(MultiPoly::is_zero));
    }

    #[test]
    fn adjoint_relation_shape_checked() {
        let r = ring(&["x"]);
        let h = PolyMatrix::zeros(&r, 2, 2);
        let f = vec![r.var("x").unwrap(), r.var("x").unwrap()];
        assert!(derive_adjoint_relation(&h, &f).is_err());
    }

    #[test]
    fn hand_chart_generic_row() {
        let r = ring(&["x1", "x2", "a", "b"]);
        let h = PolyMatrix::parse(&r, &[&["a", "b"]]).unwrap();
        let f = vec![r.var("x1").unwrap(), r.var("x2").unwrap()];
        let ch = blowup_chart(&f, &h, 1, Chart::S).unwrap();
        assert_eq!(ch.coordinate, "t");
        assert_eq!(ch.equations.len(), 1);
        assert_eq!(ch.equations[0], ch.ring.parse("x1 + t*b").unwrap());
        assert_eq!(ch.exceptional_equation, ch.ring.parse("x2 - t*a").unwrap());
        assert!(verify_chart(&ch, &f, &h).unwrap().exact);

        let ct = blowup_chart(&f, &h, 1, Chart::T).unwrap();
        assert_eq!(ct.equations[0], ct.ring.parse("s*x1 + b").unwrap());
        assert_eq!(ct.exceptional_equation, ct.ring.parse("s*x2 - a").unwrap());
        assert!(verify_chart(&ct, &f, &h).unwrap().exact);
    }

    #[test]
    fn hand_chart_rotation_row() {
        // H = (x2, -x1): the system x2*x1 - x1*x2 = 0 holds identically.
        let r = ring(&["x1", "x2"]);
        let h = PolyMatrix::parse(&r, &[&["x2", "-x1"]]).unwrap();
        let f = vec![r.var("x1").unwrap(), r.var("x2").unwrap()];
        let ch = blowup_chart(&f, &h, 1, Chart::S).unwrap();
        assert_eq!(ch.equations[0], ch.ring.parse("x1 - t*x1").unwrap());
        assert_eq!(ch.exceptional_equation, ch.ring.parse("x2 - t*x2").unwrap());
        assert!(verify_chart(&ch, &f, &h).unwrap().exact);
    }

    #[test]
    fn chart_coordinate_avoids_existing_names() {
        let r = ring(&["t", "x"]);
        let h = PolyMatrix::parse(&r, &[&["x", "t"]]).unwrap();
        let f = vec![r.var("t").unwrap(), r.var("x").unwrap()];
        let ch = blowup_chart(&f, &h, 0, Chart::S).unwrap();
        assert_eq!(ch.coordinate, "t0");
        assert!(verify_chart(&ch, &f, &h).unwrap().exact);
        assert_eq!(specialize_coordinate(&ch, 0).unwrap()[0], ch.ring.parse("x").unwrap());
    }

    #[test]
    fn column_out_of_range() {
        let r = ring(&["x"]);
        let h = PolyMatrix::parse(&r, &[&["x", "x"]]).unwrap();
        let f = vec![r.var("x").unwrap(), r.var("x").unwrap()];
        assert_eq!(
            blowup_chart(&f, &h, 2, Chart::S),
            Err(Error::InvalidIndex { index: 2, len: 2 })
        );
    }
}
