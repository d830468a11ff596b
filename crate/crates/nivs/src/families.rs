//! Named extremal families and their closed-form bounds.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::Count;
use num_rational::Ratio;

/// A constructible family member, identified by name and order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    pub family: Family,
    pub order: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Complete,
    Edgeless,
    Star,
    /// m disjoint edges padded with isolated vertices.
    MK2PlusIsolated { m: usize },
    /// Join of a clique with the 4-regular graph on 6 vertices (the
    /// complement of three disjoint edges); clique block labeled first.
    JoinComplement,
}

impl Family {
    /// Stable CLI-facing identifier.
    pub fn name(&self) -> String {
        match self {
            Family::Complete => "complete".into(),
            Family::Edgeless => "edgeless".into(),
            Family::Star => "star".into(),
            Family::MK2PlusIsolated { m } => format!("{m}k2-iso"),
            Family::JoinComplement => "join-g64".into(),
        }
    }

    pub fn from_name(name: &str) -> Result<Family> {
        match name {
            "complete" => Ok(Family::Complete),
            "edgeless" => Ok(Family::Edgeless),
            "star" => Ok(Family::Star),
            "3k2-iso" => Ok(Family::MK2PlusIsolated { m: 3 }),
            "4k2-iso" => Ok(Family::MK2PlusIsolated { m: 4 }),
            "join-g64" => Ok(Family::JoinComplement),
            _ => Err(Error::UnknownFamily { name: name.into() }),
        }
    }

    /// Smallest order at which the family is defined.
    pub fn min_order(&self) -> usize {
        match self {
            Family::Complete | Family::Edgeless => 1,
            Family::Star => 2,
            Family::MK2PlusIsolated { m } => 2 * m,
            Family::JoinComplement => 6,
        }
    }
}

impl FamilySpec {
    pub fn new(family: Family, order: usize) -> Self {
        FamilySpec { family, order }
    }
}

/// Builds the labeled family member with deterministic labeling: component
/// blocks in declaration order, isolated vertices last.
pub fn build(spec: &FamilySpec) -> Result<Graph> {
    let n = spec.order;
    let min = spec.family.min_order();
    if n < min {
        return Err(Error::FamilyOrder {
            family: spec.family.name(),
            minimum: min,
            order: n,
        });
    }
    match spec.family {
        Family::Complete => Graph::complete(n),
        Family::Edgeless => Graph::empty(n),
        Family::Star => Graph::complete(1)?.join(&Graph::empty(n - 1)?),
        Family::MK2PlusIsolated { m } => {
            let edges: Vec<_> = (0..m).map(|i| (2 * i, 2 * i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::JoinComplement => {
            let three_k2 = build(&FamilySpec::new(Family::MK2PlusIsolated { m: 3 }, 6))?;
            Graph::complete(n - 6)?.join(&three_k2.complement())
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoundKind {
    /// Lower bound on the NG sum over all graphs: n(n-1)/2.
    NgLowerGeneral,
    /// Lower bound on the NG sum over trees: (n-1)^2.
    NgLowerTree,
    /// Upper bound on the NG sum over all graphs: 27/64 * 2^n + (n+2)(n-3)/2.
    NgUpperGeneral,
    /// Upper bound on sigma1 over all graphs: 27/64 * 2^n.
    Sigma1Max,
}

/// An exact bound value; rational only for `Sigma1Max`/`NgUpperGeneral`
/// below order 6, integral everywhere else.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundValue {
    pub kind: BoundKind,
    pub order: usize,
    pub value: Ratio<i128>,
}

impl BoundValue {
    pub fn as_integer(&self) -> Option<Count> {
        if self.value.is_integer() {
            Some(self.value.to_integer() as Count)
        } else {
            None
        }
    }
}

pub fn bound(kind: BoundKind, n: usize) -> BoundValue {
    let n_i = n as i128;
    let value = match kind {
        BoundKind::NgLowerGeneral => Ratio::from_integer(n_i * (n_i - 1) / 2),
        BoundKind::NgLowerTree => Ratio::from_integer((n_i - 1) * (n_i - 1)),
        BoundKind::Sigma1Max => Ratio::new(27 * (1i128 << n), 64),
        BoundKind::NgUpperGeneral => {
            Ratio::new(27 * (1i128 << n), 64) + Ratio::from_integer((n_i + 2) * (n_i - 3) / 2)
        }
    };
    BoundValue {
        kind,
        order: n,
        value,
    }
}

/// The closed-form NG sum of the family at its order. Only the complete,
/// edgeless, star and three-disjoint-edge families have one.
pub fn closed_form_ng(spec: &FamilySpec) -> Result<Count> {
    let n = spec.order;
    let min = spec.family.min_order();
    if n < min {
        return Err(Error::FamilyOrder {
            family: spec.family.name(),
            minimum: min,
            order: n,
        });
    }
    let n_c = n as Count;
    match spec.family {
        Family::Complete | Family::Edgeless => Ok(n_c * (n_c - 1) / 2),
        Family::Star => Ok((n_c - 1) * (n_c - 1)),
        Family::MK2PlusIsolated { m: 3 } if n >= 6 => {
            // 27/64 * 2^n plus (n+2)(n-3)/2
            Ok(27 * (1 << (n - 6)) + (n_c + 2) * (n_c - 3) / 2)
        }
        _ => Err(Error::UnsupportedFamily {
            family: spec.family.name(),
        }),
    }
}
