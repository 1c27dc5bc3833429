use std::sync::Arc;

use serde::Serialize;

use crate::alg::{PolyRing, RingDesc};
use crate::error::{Error, Result};
use crate::graded::GradedSubmodule;
use crate::groebner::{intersection, krull_dim, IdealHandle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EntryFlags {
    /// Expected answer of the Cohen–Macaulay test; a mismatch fails the sign test.
    pub cm_expected: bool,
    /// Built as an intersection of primes of one dimension (or as a domain).
    pub constructed_unmixed: bool,
    pub domain: bool,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub ring: RingDesc,
    pub flags: EntryFlags,
    /// Primes the defining ideal was built from; empty when given by relations.
    pub components: Vec<IdealHandle>,
    pub note: String,
}

impl CorpusEntry {
    pub fn new(name: &str, ring: RingDesc, flags: EntryFlags, note: &str) -> Self {
        CorpusEntry {
            name: name.to_string(),
            ring,
            flags,
            components: Vec::new(),
            note: note.to_string(),
        }
    }

    /// `S / (P_1 ∩ … ∩ P_r)`; flagged unmixed only if all components share one dimension.
    pub fn intersection_of(
        name: &str,
        base: &Arc<PolyRing>,
        components: Vec<IdealHandle>,
        cm_expected: bool,
        note: &str,
    ) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::input("an intersection needs at least one component"));
        };
        let mut l = first.clone();
        for p in &components[1..] {
            l = intersection(&l, p);
        }
        let dims = components
            .iter()
            .map(krull_dim)
            .collect::<Result<Vec<_>>>()?;
        let unmixed = dims.iter().all(|d| *d == dims[0]);
        let l = IdealHandle::new(base, l.groebner_basis().polys().to_vec());
        Ok(CorpusEntry {
            name: name.to_string(),
            ring: RingDesc::from_ideal(&l),
            flags: EntryFlags {
                cm_expected,
                constructed_unmixed: unmixed,
                domain: components.len() == 1,
            },
            components,
            note: note.to_string(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct ModuleEntry {
    pub name: String,
    pub module: GradedSubmodule,
    pub note: String,
}

/// The built-in rings and modules.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub rings: Vec<CorpusEntry>,
    pub modules: Vec<ModuleEntry>,
}

const PRIME_DOMAIN: EntryFlags = EntryFlags {
    cm_expected: true,
    constructed_unmixed: true,
    domain: true,
};

impl Corpus {
    pub fn builtin(characteristic: u32) -> Result<Corpus> {
        let k2 = PolyRing::new(characteristic, &["x", "y"])?;
        let k3 = PolyRing::new(characteristic, &["x", "y", "z"])?;
        let k4 = PolyRing::new(characteristic, &["x1", "x2", "x3", "x4"])?;
        let id = |r: &Arc<PolyRing>, g: &[&str]| IdealHandle::from_strs(r, g);

        let rings = vec![
            CorpusEntry::new(
                "poly2",
                RingDesc::polynomial(&k2),
                PRIME_DOMAIN,
                "polynomial ring in two variables",
            ),
            CorpusEntry::new(
                "poly3",
                RingDesc::polynomial(&k3),
                PRIME_DOMAIN,
                "polynomial ring in three variables",
            ),
            CorpusEntry::intersection_of(
                "two-planes",
                &k4,
                vec![id(&k4, &["x1", "x2"])?, id(&k4, &["x3", "x4"])?],
                false,
                "two coordinate planes in 4-space meeting only at the origin",
            )?,
            CorpusEntry::intersection_of(
                "three-planes",
                &k4,
                vec![
                    id(&k4, &["x1", "x2"])?,
                    id(&k4, &["x3", "x4"])?,
                    id(&k4, &["x1 - x3", "x2 - x4"])?,
                ],
                false,
                "three planes in 4-space pairwise meeting only at the origin",
            )?,
            CorpusEntry::new(
                "curve345",
                RingDesc::quotient(
                    &k3,
                    k3.parse_all(&["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"])?,
                )?,
                PRIME_DOMAIN,
                "monomial curve (t^3, t^4, t^5)",
            ),
            CorpusEntry::new(
                "hypersurface",
                RingDesc::quotient(&k3, k3.parse_all(&["x^3 + y^3 + z^3"])?)?,
                PRIME_DOMAIN,
                "cone over a smooth plane cubic",
            ),
            CorpusEntry::new(
                "embedded",
                RingDesc::quotient(&k2, k2.parse_all(&["x^2", "x*y"])?)?,
                EntryFlags {
                    cm_expected: false,
                    constructed_unmixed: false,
                    domain: false,
                },
                "line with an embedded point: (x) ∩ (x, y)^2",
            ),
        ];

        let s2 = RingDesc::polynomial(&k2);
        let gens = |polys: &[&str]| -> Result<Vec<Vec<crate::alg::Polynomial>>> {
            polys.iter().map(|p| Ok(vec![k2.parse(p)?])).collect()
        };
        let modules = vec![
            ModuleEntry {
                name: "ideal-m".into(),
                module: GradedSubmodule::new(&s2, 1, gens(&["x", "y"])?)?,
                note: "maximal ideal of k[x,y]".into(),
            },
            ModuleEntry {
                name: "ideal-m2".into(),
                module: GradedSubmodule::new(&s2, 1, gens(&["x^2", "x*y", "y^2"])?)?,
                note: "square of the maximal ideal of k[x,y]".into(),
            },
            ModuleEntry {
                name: "free-rank2".into(),
                module: GradedSubmodule::free(&s2, 2)?,
                note: "free module of rank 2 generated in degree 0".into(),
            },
            ModuleEntry {
                name: "free-principal".into(),
                module: GradedSubmodule::new(&s2, 1, gens(&["x"])?)?,
                note: "principal ideal (x), free of rank 1 generated in degree 1".into(),
            },
        ];
        Ok(Corpus { rings, modules })
    }

    pub fn ring(&self, name: &str) -> Option<&CorpusEntry> {
        self.rings.iter().find(|e| e.name == name)
    }

    /// Inverts `cm_expected` on one entry (a negative control).
    pub fn flip_cm_expected(&mut self, name: &str) -> Result<()> {
        let entry = self
            .rings
            .iter_mut()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::input(format!("no corpus entry named `{name}`")))?;
        entry.flags.cm_expected = !entry.flags.cm_expected;
        Ok(())
    }
}
