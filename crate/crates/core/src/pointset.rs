use std::collections::HashSet;

use crate::error::{usage, Result};
use crate::field::Field;
use crate::geometry::{Point, PointKind};

/// A nonempty finite set of distinct points of one kind over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet<F> {
    label: String,
    kind: PointKind,
    points: Vec<Point<F>>,
}

impl<F: Field> PointSet<F> {
    pub fn new(label: impl Into<String>, points: Vec<Point<F>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return usage("point set is empty");
        };
        let kind = first.kind();
        if let Some((i, p)) = points.iter().enumerate().find(|(_, p)| p.kind() != kind) {
            return usage(format!("point {i} is {}, expected {kind}", p.kind()));
        }
        let mut seen = HashSet::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if !seen.insert(p) {
                return usage(format!("duplicate point {p} at index {i}"));
            }
        }
        Ok(Self {
            label: label.into(),
            kind,
            points,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point<F>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Option<&Point<F>> {
        self.points.get(i)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point<F>> {
        self.points.iter()
    }

    pub fn into_points(self) -> Vec<Point<F>> {
        self.points
    }

    /// The points at `indices`, in that order.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        let mut pts = Vec::with_capacity(indices.len());
        for &i in indices {
            match self.points.get(i) {
                Some(p) => pts.push(p.clone()),
                None => return usage(format!("index {i} out of range for {} points", self.len())),
            }
        }
        Self::new(format!("{} (subset)", self.label), pts)
    }

    /// Index check shared by operations taking a point index.
    pub(crate) fn check_index(&self, i: usize) -> Result<&Point<F>> {
        match self.points.get(i) {
            Some(p) => Ok(p),
            None => usage(format!("index {i} out of range for {} points", self.len())),
        }
    }
}

impl<'a, F> IntoIterator for &'a PointSet<F> {
    type Item = &'a Point<F>;
    type IntoIter = std::slice::Iter<'a, Point<F>>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::field::{integer, Rational};

    fn p2(x: i64, y: i64) -> Point<Rational> {
        Point::affine2(integer(x), integer(y))
    }

    #[test]
    fn rejects_duplicates_empty_and_mixed() {
        assert!(matches!(PointSet::<Rational>::new("e", vec![]), Err(Error::Usage(_))));
        assert!(matches!(
            PointSet::new("d", vec![p2(0, 0), p2(1, 1), p2(0, 0)]),
            Err(Error::Usage(_))
        ));
        let mixed = vec![p2(0, 0), Point::affine3(integer(0), integer(0), integer(1))];
        assert!(matches!(PointSet::new("m", mixed), Err(Error::Usage(_))));
    }

    #[test]
    fn subset_keeps_order() {
        let s = PointSet::new("s", vec![p2(0, 0), p2(1, 0), p2(2, 5)]).unwrap();
        let sub = s.subset(&[2, 0]).unwrap();
        assert_eq!(sub.points(), &[p2(2, 5), p2(0, 0)]);
        assert!(s.subset(&[3]).is_err());
    }
}
