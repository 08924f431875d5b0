//! Variety-membership witnesses: evidence that a homomorphism's target is a
//! quotient of a diagonal-containing subalgebra of a power of its source.
//!
//! A witness never materializes the power. It answers membership queries
//! about points, projects points it recognizes, and can lift elements back
//! through the projection. Composition multiplies the index sets, so points
//! of a composed witness are column families of points of the left one.

use super::{EnrichedAlgebra, OneStepResult};
use crate::algebra::{same_algebra, Homomorphism};
use crate::error::{Error, Result};

/// A point of a finite power, shaped by the witness that reads it: a bare
/// element for a singleton index, a value row for a coordinate list, and a
/// column family for a product index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerPoint {
    Leaf(usize),
    Vector(Vec<usize>),
    Matrix(Vec<PowerPoint>),
}

#[derive(Clone, Debug)]
enum WitnessKind {
    /// The target is a direct image; the subalgebra is the whole source
    /// over a singleton index and the projection is the map itself.
    Surjection,
    /// The subalgebra is an enriched closure and the projection reads off
    /// filter classes.
    Enrichment {
        enriched: EnrichedAlgebra,
        class_of: Vec<usize>,
    },
    /// Product of two witnesses; `right` is never itself a product, so
    /// column families always nest leftward.
    Composed { left: Box<Witness>, right: Box<Witness> },
}

/// Witness that a homomorphism's target embeds into a quotient of a
/// diagonal-containing subalgebra of a power of its source.
///
/// Invariants: the diagonal of the source lies in the subalgebra, and the
/// projection restricted to the diagonal equals the witnessed map.
#[derive(Clone, Debug)]
pub struct Witness {
    /// The homomorphism being witnessed.
    pub hom: Homomorphism,
    kind: WitnessKind,
}

impl Witness {
    /// Wraps an onto homomorphism as its own witness over a singleton
    /// index.
    pub fn surjection(hom: Homomorphism) -> Result<Self> {
        if !hom.is_surjective() {
            return Err(Error::ContractViolation(
                "a singleton-index witness needs an onto homomorphism".into(),
            ));
        }
        let w = Witness { hom, kind: WitnessKind::Surjection };
        w.verify()?;
        Ok(w)
    }

    /// Number of coordinates in the witnessed power.
    pub fn index_size(&self) -> usize {
        match &self.kind {
            WitnessKind::Surjection => 1,
            WitnessKind::Enrichment { enriched, .. } => enriched.index_set.len(),
            WitnessKind::Composed { left, right } => left.index_size() * right.index_size(),
        }
    }

    /// Human-readable shape of the index set.
    pub fn index_descriptor(&self) -> String {
        match &self.kind {
            WitnessKind::Surjection => "1".into(),
            WitnessKind::Enrichment { enriched, .. } => {
                let names: Vec<String> = enriched
                    .index_set
                    .iter()
                    .map(|&d| enriched.base.name_of(d))
                    .collect();
                format!("{{{}}}", names.join(","))
            }
            WitnessKind::Composed { left, right } => {
                format!("({})x({})", left.index_descriptor(), right.index_descriptor())
            }
        }
    }

    /// The constant point of a source element, shaped for this witness.
    pub fn diagonal(&self, x: usize) -> PowerPoint {
        match &self.kind {
            WitnessKind::Surjection => PowerPoint::Leaf(x),
            WitnessKind::Enrichment { enriched, .. } => {
                PowerPoint::Vector(vec![x; enriched.index_set.len()])
            }
            WitnessKind::Composed { left, right } => {
                PowerPoint::Matrix(vec![left.diagonal(x); right.index_size()])
            }
        }
    }

    /// Builds the point a simple witness expects from raw coordinate
    /// values. Product witnesses never stand on the right of a
    /// composition, so they never need this shape.
    fn point_from_coords(&self, coords: Vec<usize>) -> PowerPoint {
        match &self.kind {
            WitnessKind::Surjection => {
                debug_assert_eq!(coords.len(), 1);
                PowerPoint::Leaf(coords[0])
            }
            WitnessKind::Enrichment { .. } => PowerPoint::Vector(coords),
            WitnessKind::Composed { .. } => {
                unreachable!("compositions normalize products to the left")
            }
        }
    }

    /// Coordinate values of a simple point.
    fn point_coords(p: &PowerPoint) -> Vec<usize> {
        match p {
            PowerPoint::Leaf(x) => vec![*x],
            PowerPoint::Vector(v) => v.clone(),
            PowerPoint::Matrix(_) => unreachable!("column families have no flat coordinates"),
        }
    }

    /// Membership of a point in the witnessed subalgebra.
    pub fn contains(&self, p: &PowerPoint) -> bool {
        match (&self.kind, p) {
            (WitnessKind::Surjection, PowerPoint::Leaf(x)) => *x < self.hom.source.size(),
            (WitnessKind::Enrichment { enriched, .. }, PowerPoint::Vector(v)) => {
                if v.len() != enriched.index_set.len() || v.iter().any(|&x| x > u8::MAX as usize) {
                    return false;
                }
                let row: Vec<u8> = v.iter().map(|&x| x as u8).collect();
                enriched.id_of_map(&row).is_some()
            }
            (WitnessKind::Composed { left, right }, PowerPoint::Matrix(cols)) => {
                if cols.len() != right.index_size() {
                    return false;
                }
                let mut projected = Vec::with_capacity(cols.len());
                for col in cols {
                    if !left.contains(col) {
                        return false;
                    }
                    match left.project(col) {
                        Some(v) => projected.push(v),
                        None => return false,
                    }
                }
                right.contains(&right.point_from_coords(projected))
            }
            _ => false,
        }
    }

    /// Image of a member point under the projection; `None` outside the
    /// subalgebra.
    pub fn project(&self, p: &PowerPoint) -> Option<usize> {
        match (&self.kind, p) {
            (WitnessKind::Surjection, PowerPoint::Leaf(x)) => {
                if *x < self.hom.source.size() {
                    Some(self.hom.apply(*x))
                } else {
                    None
                }
            }
            (WitnessKind::Enrichment { enriched, class_of }, PowerPoint::Vector(v)) => {
                if v.iter().any(|&x| x > u8::MAX as usize) {
                    return None;
                }
                let row: Vec<u8> = v.iter().map(|&x| x as u8).collect();
                enriched.id_of_map(&row).map(|id| class_of[id])
            }
            (WitnessKind::Composed { left, right }, PowerPoint::Matrix(cols)) => {
                if cols.len() != right.index_size() {
                    return None;
                }
                let mut projected = Vec::with_capacity(cols.len());
                for col in cols {
                    projected.push(left.project(col)?);
                }
                right.project(&right.point_from_coords(projected))
            }
            _ => None,
        }
    }

    /// Some member point projecting onto `v`; exists for every target
    /// element because the projection is onto.
    fn preimage_point(&self, v: usize) -> Option<PowerPoint> {
        match &self.kind {
            WitnessKind::Surjection => {
                self.hom.map.iter().position(|&y| y == v).map(PowerPoint::Leaf)
            }
            WitnessKind::Enrichment { enriched, class_of } => {
                let id = class_of.iter().position(|&c| c == v)?;
                let row: Vec<usize> = enriched.map_of(id).iter().map(|&x| x as usize).collect();
                Some(PowerPoint::Vector(row))
            }
            WitnessKind::Composed { left, right } => {
                let over = right.preimage_point(v)?;
                let coords = Self::point_coords(&over);
                let mut cols = Vec::with_capacity(coords.len());
                for b in coords {
                    cols.push(left.preimage_point(b)?);
                }
                Some(PowerPoint::Matrix(cols))
            }
        }
    }

    /// Distinguished non-diagonal generators of the subalgebra, paired with
    /// their expected projections. The diagonal itself is checked
    /// separately.
    fn generator_points(&self) -> Vec<(PowerPoint, usize)> {
        match &self.kind {
            WitnessKind::Surjection => Vec::new(),
            WitnessKind::Enrichment { enriched, class_of } => {
                let row: Vec<usize> =
                    enriched.map_of(enriched.iota).iter().map(|&x| x as usize).collect();
                vec![(PowerPoint::Vector(row), class_of[enriched.iota])]
            }
            WitnessKind::Composed { left, right } => {
                let mut out = Vec::new();
                // A left generator spreads into a constant column family.
                for (gp, expected) in left.generator_points() {
                    let lifted = PowerPoint::Matrix(vec![gp; right.index_size()]);
                    out.push((lifted, right.hom.apply(expected)));
                }
                // A right generator lifts columnwise through left
                // preimages.
                for (gp, expected) in right.generator_points() {
                    let coords = Self::point_coords(&gp);
                    let cols: Option<Vec<PowerPoint>> =
                        coords.into_iter().map(|b| left.preimage_point(b)).collect();
                    if let Some(cols) = cols {
                        out.push((PowerPoint::Matrix(cols), expected));
                    }
                }
                out
            }
        }
    }

    /// Re-proves the witness laws on the full source: every diagonal point
    /// is a member and projects to the witnessed value, and every
    /// distinguished generator is a member projecting where it should.
    pub fn verify(&self) -> Result<()> {
        for x in 0..self.hom.source.size() {
            let p = self.diagonal(x);
            if !self.contains(&p) {
                return Err(Error::ContractViolation(format!(
                    "diagonal point of {} escapes the membership oracle",
                    self.hom.source.name_of(x)
                )));
            }
            if self.project(&p) != Some(self.hom.apply(x)) {
                return Err(Error::ContractViolation(format!(
                    "projection disagrees with the witnessed map at {}",
                    self.hom.source.name_of(x)
                )));
            }
        }
        for (gp, expected) in self.generator_points() {
            if !self.contains(&gp) {
                return Err(Error::ContractViolation(
                    "a generator point escapes the membership oracle".into(),
                ));
            }
            if self.project(&gp) != Some(expected) {
                return Err(Error::ContractViolation(
                    "a generator point projects to the wrong class".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Witness for a one-step embedding: the coordinate list indexes the power,
/// the enriched closure is the subalgebra, and the filter classes project
/// it onto the quotient.
pub fn witness_for_onestep(step: &OneStepResult) -> Result<Witness> {
    let w = Witness {
        hom: step.embedding.clone(),
        kind: WitnessKind::Enrichment {
            enriched: step.enriched.clone(),
            class_of: step.quotient.class_of.clone(),
        },
    };
    w.verify()?;
    Ok(w)
}

/// Joins witnesses along composable homomorphisms: the result reads column
/// families over the right index whose columns live in the left subalgebra
/// and whose projections assemble into a member of the right one.
///
/// Products associate to the left, so a product handed in on the right is
/// first split apart.
pub fn compose_witnesses(w1: Witness, w2: Witness) -> Result<Witness> {
    if !same_algebra(&w1.hom.target, &w2.hom.source) {
        return Err(Error::ContractViolation(
            "witness composition needs the left target to be the right source".into(),
        ));
    }
    if let WitnessKind::Composed { left, right } = w2.kind {
        let inner = compose_witnesses(w1, *left)?;
        return compose_witnesses(inner, *right);
    }
    let hom = w1.hom.then(&w2.hom)?;
    let w = Witness {
        hom,
        kind: WitnessKind::Composed { left: Box::new(w1), right: Box::new(w2) },
    };
    w.verify()?;
    Ok(w)
}

/// Structural equality of the carried homomorphisms, used by tests and
/// callers that must confirm a witness talks about the map they hold.
pub(crate) fn witnesses_same_hom(w: &Witness, f: &Homomorphism) -> bool {
    w.hom.map == f.map
        && same_algebra(&w.hom.source, &f.source)
        && same_algebra(&w.hom.target, &f.target)
}
