use std::f64::consts::TAU;

use crate::{Error, Result};

use super::{normalize_angle, unit, Point2, Polygon2, COLLINEAR_TOL};

/// A finite nonnegative measure on the circle: atoms `(angle, weight)` with
/// angles in `[0, 2π)`, strictly increasing, and positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomicMeasure1 {
    atoms: Vec<(f64, f64)>,
}

impl AtomicMeasure1 {
    /// Normalizes angles into `[0, 2π)`, sorts, merges atoms closer than
    /// `1e-9` rad (including across `2π`), and drops zero weights.
    pub fn new(atoms: Vec<(f64, f64)>) -> Result<Self> {
        for &(t, w) in &atoms {
            if !t.is_finite() || !w.is_finite() {
                return Err(Error::InvalidInput("non-finite atom".into()));
            }
            if w < 0.0 {
                return Err(Error::InvalidInput(format!("negative atom weight {w}")));
            }
        }
        let mut a: Vec<(f64, f64)> = atoms
            .into_iter()
            .filter(|&(_, w)| w > 0.0)
            .map(|(t, w)| (normalize_angle(t), w))
            .collect();
        a.sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(a.len());
        for (t, w) in a {
            match merged.last_mut() {
                Some(last) if t - last.0 <= COLLINEAR_TOL => {
                    last.0 = (last.0 * last.1 + t * w) / (last.1 + w);
                    last.1 += w;
                }
                _ => merged.push((t, w)),
            }
        }
        if merged.len() > 1 {
            let (t_last, w_last) = merged[merged.len() - 1];
            if merged[0].0 + TAU - t_last <= COLLINEAR_TOL {
                merged.pop();
                let first = &mut merged[0];
                // keep the merged angle near 0 on the unwrapped side
                let t = ((t_last - TAU) * w_last + first.0 * first.1) / (w_last + first.1);
                first.0 = normalize_angle(t);
                first.1 += w_last;
                merged.sort_by(|x, y| x.0.total_cmp(&y.0));
            }
        }
        Ok(Self { atoms: merged })
    }

    pub fn empty() -> Self {
        Self { atoms: Vec::new() }
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.1).sum()
    }

    /// `‖∑ w_i (cos θ_i, sin θ_i)‖`; zero for every surface area measure.
    pub fn closure_defect(&self) -> f64 {
        self.atoms
            .iter()
            .fold(Point2::zeros(), |acc, &(t, w)| acc + unit(t) * w)
            .norm()
    }

    /// Push-forward under rotation by `phi`.
    pub fn rotate(&self, phi: f64) -> Self {
        Self::new(self.atoms.iter().map(|&(t, w)| (t + phi, w)).collect())
            .expect("rotation keeps a valid measure")
    }

    pub fn scale(&self, s: f64) -> Result<Self> {
        Self::new(self.atoms.iter().map(|&(t, w)| (t, w * s)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut a = self.atoms.clone();
        a.extend_from_slice(&other.atoms);
        Self::new(a).expect("sum of valid measures")
    }

    /// Atom-wise distance to `other`: `None` if the atom counts differ,
    /// otherwise the largest angular and weight deviations.
    pub fn atom_distance(&self, other: &Self) -> Option<(f64, f64)> {
        if self.len() != other.len() {
            return None;
        }
        let mut dt: f64 = 0.0;
        let mut dw: f64 = 0.0;
        for (a, b) in self.atoms.iter().zip(&other.atoms) {
            let d = (a.0 - b.0).abs();
            dt = dt.max(d.min(TAU - d));
            dw = dw.max((a.1 - b.1).abs());
        }
        Some((dt, dw))
    }
}

/// Surface area measure of a polygon: one atom per edge at its outward normal
/// with the edge length as weight. A segment yields two opposite atoms, a
/// point the empty measure.
pub fn area_measure(p: &Polygon2) -> AtomicMeasure1 {
    let atoms = p
        .edge_vectors()
        .into_iter()
        .zip(p.edge_normal_angles())
        .map(|(e, t)| (t, e.norm()))
        .collect();
    AtomicMeasure1::new(atoms).expect("edges give a valid measure")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn interval_measure() {
        let m = area_measure(&Polygon2::interval());
        assert_eq!(m.len(), 2);
        let (a, b) = (m.atoms()[0], m.atoms()[1]);
        assert!(a.0.abs() < 1e-15 && (a.1 - 1.0).abs() < 1e-15);
        assert!((b.0 - PI).abs() < 1e-15 && (b.1 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn square_and_triangle_measures() {
        let m = area_measure(&Polygon2::unit_square());
        let want = [0.0, PI / 2.0, PI, 1.5 * PI];
        for (&(t, w), &wt) in m.atoms().iter().zip(&want) {
            assert!((t - wt).abs() < 1e-15 && (w - 1.0).abs() < 1e-15);
        }
        let t = Polygon2::from_points(&[
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        let m = area_measure(&t);
        let want = [(PI / 4.0, 2f64.sqrt()), (PI, 1.0), (1.5 * PI, 1.0)];
        for (&(t, w), &(wt, ww)) in m.atoms().iter().zip(&want) {
            assert!((t - wt).abs() < 1e-15 && (w - ww).abs() < 1e-15);
        }
        assert!(m.closure_defect() < 1e-15);
    }

    #[test]
    fn point_has_empty_measure() {
        assert!(area_measure(&Polygon2::point(Point2::new(1.0, 2.0))).is_empty());
    }

    #[test]
    fn merging_across_zero() {
        let m = AtomicMeasure1::new(vec![(TAU - 1e-12, 1.0), (1e-12, 1.0), (1.0, 0.5)]).unwrap();
        assert_eq!(m.len(), 2);
        assert!((m.total_mass() - 2.5).abs() < 1e-15);
        assert!(AtomicMeasure1::new(vec![(0.0, -1.0)]).is_err());
    }
}
