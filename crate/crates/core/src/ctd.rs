//! Change tracking diagram and closed-form transport of highest weights.

use serde::{Deserialize, Serialize};

use crate::base::BaseWord;
use crate::diagram::{arrow_diagram, CapDiagram, WeightDiagram};
use crate::error::{Error, Result};
use crate::roots::RightOddRoot;
use crate::weight::{rho, ShiftedWeight};

/// bit(i,j) = 1 iff reflecting by ε_i - δ_j changes the highest weight.
/// Each row is a contiguous window of columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ctd {
    m: usize,
    n: usize,
    rows: Vec<Option<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct CtdRowJson {
    i: usize,
    jmin: usize,
    jmax: usize,
}

#[derive(Serialize, Deserialize)]
struct CtdJson {
    m: usize,
    n: usize,
    rows: Vec<CtdRowJson>,
}

impl Ctd {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Column window of row i (1-based), `None` when the row is empty.
    pub fn window(&self, i: usize) -> Option<(usize, usize)> {
        self.rows[i - 1]
    }

    pub fn bit(&self, i: usize, j: usize) -> bool {
        matches!(self.rows[i - 1], Some((lo, hi)) if lo <= j && j <= hi)
    }

    /// All 1-bits, row-major.
    pub fn ones(&self) -> Vec<RightOddRoot> {
        (1..=self.m)
            .flat_map(|i| {
                self.window(i)
                    .into_iter()
                    .flat_map(move |(lo, hi)| (lo..=hi).map(move |j| RightOddRoot::new(i, j)))
            })
            .collect()
    }

    /// Dense view, `grid[i-1][j-1]`.
    pub fn to_grid(&self) -> Vec<Vec<bool>> {
        (1..=self.m)
            .map(|i| (1..=self.n).map(|j| self.bit(i, j)).collect())
            .collect()
    }

    /// Fails with `NonContiguousRow` if some row is not a single window.
    pub fn from_grid(m: usize, n: usize, grid: &[Vec<bool>]) -> Result<Self> {
        let mut rows = Vec::with_capacity(m);
        for (r, row) in grid.iter().enumerate() {
            let set: Vec<usize> = (0..n).filter(|&j| row[j]).map(|j| j + 1).collect();
            match (set.first(), set.last()) {
                (Some(&lo), Some(&hi)) => {
                    if hi - lo + 1 != set.len() {
                        return Err(Error::NonContiguousRow(r + 1));
                    }
                    rows.push(Some((lo, hi)));
                }
                _ => rows.push(None),
            }
        }
        Ok(Ctd { m, n, rows })
    }

    pub fn to_json(&self) -> String {
        let rows = (1..=self.m)
            .filter_map(|i| {
                self.window(i)
                    .map(|(jmin, jmax)| CtdRowJson { i, jmin, jmax })
            })
            .collect();
        serde_json::to_string(&CtdJson {
            m: self.m,
            n: self.n,
            rows,
        })
        .expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let parsed: CtdJson =
            serde_json::from_str(s).map_err(|e| Error::DiagramParse(e.to_string()))?;
        let mut rows = vec![None; parsed.m];
        for r in parsed.rows {
            if r.i == 0 || r.i > parsed.m || r.jmin == 0 || r.jmin > r.jmax || r.jmax > parsed.n {
                return Err(Error::DiagramParse(format!("bad CTD row {}", r.i)));
            }
            rows[r.i - 1] = Some((r.jmin, r.jmax));
        }
        Ok(Ctd {
            m: parsed.m,
            n: parsed.n,
            rows,
        })
    }

    /// m×n grid of '#'/'.', row 1 on top.
    pub fn to_ascii(&self) -> String {
        let mut s = String::new();
        for i in 1..=self.m {
            for j in 1..=self.n {
                s.push(if self.bit(i, j) { '#' } else { '.' });
            }
            s.push('\n');
        }
        s
    }

    /// λ̄_Σ = λ̄ + Σ_{α ∈ B_Σ} c(α)·α.
    pub fn transport(&self, lambda: &ShiftedWeight, sigma: &BaseWord) -> Result<ShiftedWeight> {
        sigma.check_dims(lambda)?;
        let mut out = lambda.clone();
        for (r, e) in sigma.row_lengths().into_iter().enumerate() {
            if let Some((lo, hi)) = self.rows[r] {
                for j in lo..=hi.min(e) {
                    out.eps[r] += 1;
                    out.delta[j - 1] -= 1;
                }
            }
        }
        Ok(out)
    }
}

/// Row i is the window [M_i + 1 - (k_i - λ̄_i), M_i], empty when k_i = λ̄_i.
pub fn ctd(lambda: &ShiftedWeight) -> Result<Ctd> {
    let arrows = arrow_diagram(lambda)?;
    let rows = (1..=lambda.m())
        .map(|i| {
            let len = arrows.length(i);
            let hi = arrows.big_m(i);
            (len > 0).then(|| {
                assert!(hi >= len, "window of row {i} leaves the grid");
                (hi + 1 - len, hi)
            })
        })
        .collect();
    Ok(Ctd {
        m: lambda.m(),
        n: lambda.n(),
        rows,
    })
}

pub fn shifted_weight_for_base(lambda: &ShiftedWeight, sigma: &BaseWord) -> Result<ShiftedWeight> {
    sigma.check_dims(lambda)?;
    ctd(lambda)?.transport(lambda, sigma)
}

/// λ_Σ = λ - Σ_{α ∈ B_Σ, c(α) = 0} α for an unshifted λ supplied by the caller.
pub fn weight_for_base_from(
    unshifted: &ShiftedWeight,
    lambda: &ShiftedWeight,
    sigma: &BaseWord,
) -> Result<ShiftedWeight> {
    sigma.check_dims(lambda)?;
    sigma.check_dims(unshifted)?;
    let c = ctd(lambda)?;
    let mut out = unshifted.clone();
    for r in sigma.b_sigma() {
        if !c.bit(r.i, r.j) {
            out.eps[r.i - 1] -= 1;
            out.delta[r.j - 1] += 1;
        }
    }
    Ok(out)
}

/// As [`weight_for_base_from`] with λ = λ̄ - ρ, ρ from [`rho`].
pub fn weight_for_base(lambda: &ShiftedWeight, sigma: &BaseWord) -> Result<ShiftedWeight> {
    let r = rho(lambda.m(), lambda.n());
    let unshifted = ShiftedWeight::new(
        lambda.eps.iter().zip(&r.eps).map(|(a, p)| a - p).collect(),
        lambda
            .delta
            .iter()
            .zip(&r.delta)
            .map(|(b, p)| b - p)
            .collect(),
    );
    weight_for_base_from(&unshifted, lambda, sigma)
}

/// D_λ with every × moved along its cap.
pub fn anti_distinguished_diagram(lambda: &ShiftedWeight) -> Result<WeightDiagram> {
    lambda.check_dominant()?;
    let mut d = WeightDiagram::of(lambda);
    let caps = CapDiagram::of_diagram(&d).caps;
    for (p, q) in caps {
        let mut c = d.cell(p);
        c.crosses -= 1;
        d.set(p, c);
        let mut e = d.cell(q);
        e.crosses += 1;
        d.set(q, e);
    }
    Ok(d)
}

/// λ̄_{Σ^m}, λ̄_{Σ^{m-1}}, ..., λ̄_{Σ^0}: the first entry is λ̄, the last is the
/// anti-distinguished highest weight.
pub fn distinguished_to_anti_walk(lambda: &ShiftedWeight) -> Result<Vec<ShiftedWeight>> {
    let c = ctd(lambda)?;
    let mut cur = lambda.clone();
    let mut out = vec![cur.clone()];
    for i in (1..=lambda.m()).rev() {
        if let Some((lo, hi)) = c.window(i) {
            for j in lo..=hi {
                cur.eps[i - 1] += 1;
                cur.delta[j - 1] -= 1;
            }
        }
        out.push(cur.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ShiftedWeight {
        s.parse().unwrap()
    }

    #[test]
    fn ctd_windows() {
        let c = ctd(&w("4 3 0 | 0 -1 -3 -4 -5")).unwrap();
        assert_eq!(
            (c.window(1), c.window(2), c.window(3)),
            (Some((3, 5)), Some((3, 5)), Some((1, 2)))
        );
        let c = ctd(&w("5 4 3 0 -1 | 1 0 -3 -4 -5")).unwrap();
        for i in 1..=3 {
            assert_eq!(c.window(i), Some((3, 5)));
        }
        for i in 4..=5 {
            assert_eq!(c.window(i), Some((1, 2)));
        }
        assert!(ctd(&w("3 2 | 0 -1")).unwrap().ones().is_empty());
    }

    #[test]
    fn transport_goldens() {
        let got =
            shifted_weight_for_base(&w("4 3 0 | 0 -1 -3 -4 -5"), &"edddeedd".parse().unwrap())
                .unwrap();
        assert_eq!(got, w("4 4 2 | -1 -2 -4 -4 -5"));
        let lam = w("5 4 3 0 -1 | 1 0 -3 -4 -5");
        let sigma = BaseWord::from_incomparable_set(&"1:3,2:4,3:5".parse().unwrap(), 5, 5).unwrap();
        assert_eq!(
            shifted_weight_for_base(&lam, &sigma).unwrap(),
            w("5 5 5 2 1 | -1 -2 -5 -5 -5")
        );
        assert_eq!(
            shifted_weight_for_base(&lam, &BaseWord::distinguished(5, 5)).unwrap(),
            lam
        );
        assert!(shifted_weight_for_base(&lam, &BaseWord::distinguished(4, 5)).is_err());
    }

    #[test]
    fn unshifted_transport() {
        let de: BaseWord = "de".parse().unwrap();
        assert_eq!(weight_for_base(&w("0|0"), &de).unwrap(), w("0|0"));
        assert_eq!(weight_for_base(&w("1|0"), &de).unwrap(), w("0|1"));
        assert_eq!(
            weight_for_base(&w("1|0"), &"ed".parse().unwrap()).unwrap(),
            w("1|0")
        );
    }

    #[test]
    fn anti_diagram() {
        let d = anti_distinguished_diagram(&w("6 4 3 0 | 0 -1 -4 -5")).unwrap();
        assert_eq!(d.to_string(), "1:<,2:X,3:>,5:<,6:>,7:X");
        assert_eq!(
            anti_distinguished_diagram(&w("0|0")).unwrap().to_string(),
            "1:X"
        );
        let typ = w("3 2 | 0 -1");
        assert_eq!(
            anti_distinguished_diagram(&typ).unwrap(),
            WeightDiagram::of(&typ)
        );
    }

    #[test]
    fn walk() {
        assert_eq!(
            distinguished_to_anti_walk(&w("0|0")).unwrap(),
            vec![w("0|0"), w("1|-1")]
        );
        let lam = w("6 4 3 0 | 0 -1 -4 -5");
        let walk = distinguished_to_anti_walk(&lam).unwrap();
        assert_eq!(walk.len(), 5);
        let moved: Vec<String> = walk
            .iter()
            .map(|x| WeightDiagram::of(x).to_string())
            .collect();
        assert_eq!(moved[0], "0:X,1:<,3:>,4:X,5:<,6:>");
        assert_eq!(moved[1], "1:<,2:X,3:>,4:X,5:<,6:>");
        assert_eq!(moved[2], moved[1]);
        assert_eq!(moved[3], "1:<,2:X,3:>,5:<,6:X>");
        assert_eq!(moved[4], "1:<,2:X,3:>,5:<,6:>,7:X");
    }

    #[test]
    fn json_roundtrip() {
        let c = ctd(&w("4 3 0 | 0 -1 -3 -4 -5")).unwrap();
        let s = c.to_json();
        assert_eq!(
            s,
            r#"{"m":3,"n":5,"rows":[{"i":1,"jmin":3,"jmax":5},{"i":2,"jmin":3,"jmax":5},{"i":3,"jmin":1,"jmax":2}]}"#
        );
        assert_eq!(Ctd::from_json(&s).unwrap(), c);
        assert_eq!(Ctd::from_grid(3, 5, &c.to_grid()).unwrap(), c);
        assert!(Ctd::from_grid(1, 3, &[vec![true, false, true]]).is_err());
    }
}
