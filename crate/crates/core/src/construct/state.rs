use indexmap::IndexMap;
use num_complex::Complex;

use crate::disk::{Anchor, CurveObject, DiskPoint, Figure, Geodesic, IdealPoint};

use super::script::Step;

/// A line, ray or segment. Rays and segments are lines with a restricted
/// extent; intersections honour the restriction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineObject {
    pub geodesic: Geodesic<f64>,
    pub from: Option<DiskPoint<f64>>,
    pub to: Option<DiskPoint<f64>>,
}

impl LineObject {
    pub fn line(geodesic: Geodesic<f64>) -> Self {
        Self { geodesic, from: None, to: None }
    }

    pub fn ray(origin: DiskPoint<f64>, geodesic: Geodesic<f64>) -> Self {
        Self { geodesic, from: Some(origin), to: None }
    }

    /// Whether a point of the line lies within the extent.
    pub fn admits(&self, p: &DiskPoint<f64>) -> bool {
        let f = self.geodesic.frame();
        let t = |q: &DiskPoint<f64>| f.apply(q.z()).re;
        let x = t(p);
        let slack = 1e-12;
        self.from.is_none_or(|a| x >= t(&a) - slack) && self.to.is_none_or(|b| x <= t(&b) + slack)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Object {
    Point(DiskPoint<f64>),
    Ideal(IdealPoint<f64>),
    Line(LineObject),
    Curve(CurveObject<f64>),
    Scalar(f64),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Point(_) => "point",
            Object::Ideal(_) => "ideal point",
            Object::Line(_) => "line",
            Object::Curve(_) => "curve",
            Object::Scalar(_) => "scalar",
        }
    }

    pub fn anchor(&self) -> Option<Anchor<f64>> {
        match self {
            Object::Point(p) => Some(Anchor::Interior(*p)),
            Object::Ideal(p) => Some(Anchor::Ideal(*p)),
            _ => None,
        }
    }

    pub fn figure(&self) -> Option<Figure<f64>> {
        match self {
            Object::Line(l) => Some(Figure::Line(l.geodesic)),
            Object::Curve(c) => Some(Figure::Curve(*c)),
            _ => None,
        }
    }

    /// Coordinates to compare when checking replay determinism.
    pub fn coordinates(&self) -> Vec<f64> {
        let c = |z: Complex<f64>| [z.re, z.im];
        match self {
            Object::Point(p) => c(p.z()).to_vec(),
            Object::Ideal(p) => vec![p.theta()],
            Object::Line(l) => {
                let mut v = vec![l.geodesic.start().theta(), l.geodesic.end().theta()];
                for p in [l.from, l.to].into_iter().flatten() {
                    v.extend(c(p.z()));
                }
                v
            }
            Object::Curve(cv) => match cv.realization() {
                crate::disk::Cline::Circle { center, radius } => vec![center.re, center.im, radius],
                crate::disk::Cline::Line { point, dir } => vec![point.re, point.im, dir.re, dir.im],
            },
            Object::Scalar(x) => vec![*x],
        }
    }
}

/// Named objects in creation order plus the log of steps that made them.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConstructionState {
    objects: IndexMap<String, Object>,
    log: Vec<Step>,
}

impl ConstructionState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a named object; `false` when the name is taken.
    pub fn insert(&mut self, name: &str, object: Object) -> bool {
        if self.objects.contains_key(name) {
            return false;
        }
        self.objects.insert(name.to_string(), object);
        true
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.get(name)
    }

    pub fn point(&self, name: &str) -> Option<DiskPoint<f64>> {
        match self.get(name)? {
            Object::Point(p) => Some(*p),
            _ => None,
        }
    }

    pub fn ideal(&self, name: &str) -> Option<IdealPoint<f64>> {
        match self.get(name)? {
            Object::Ideal(p) => Some(*p),
            _ => None,
        }
    }

    pub fn line(&self, name: &str) -> Option<LineObject> {
        match self.get(name)? {
            Object::Line(l) => Some(*l),
            _ => None,
        }
    }

    pub fn scalar(&self, name: &str) -> Option<f64> {
        match self.get(name)? {
            Object::Scalar(x) => Some(*x),
            _ => None,
        }
    }

    pub fn objects(&self) -> impl Iterator<Item = (&str, &Object)> {
        self.objects.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn log(&self) -> &[Step] {
        &self.log
    }

    pub(crate) fn record(&mut self, step: Step) {
        self.log.push(step);
    }
}
