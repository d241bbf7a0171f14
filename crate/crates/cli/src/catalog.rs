//! Named example buildings, rebuilt deterministically from parameters.

use std::collections::BTreeMap;
use std::sync::Arc;

use buildings_core::arrangement::{braid_chamber_system, coxeter_map};
use buildings_core::artifact::Artifact;
use buildings_core::bruhat::build_gb_building;
use buildings_core::building::ApartmentEmbedding;
use buildings_core::complex::CoxeterComplex;
use buildings_core::coxeter::{parse_symbol, CoxeterSystem, DEFAULT_CAP};
use buildings_core::flag::build_flag_building;
use buildings_core::symplectic::build_sp_building;
use buildings_core::tree::{build_tree, TruncatedTree};
use buildings_core::{ChamberSystem, WMetricBuilding};
use clap::ValueEnum;
use serde_json::Value;

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Flag,
    Sp,
    Gb,
    Coxeter,
    Tree,
    Arrangement,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Flag => "flag",
            Kind::Sp => "sp",
            Kind::Gb => "gb",
            Kind::Coxeter => "coxeter",
            Kind::Tree => "tree",
            Kind::Arrangement => "arrangement",
        }
    }

    pub fn from_name(name: &str) -> Result<Kind, Failure> {
        Kind::from_str(name, false).map_err(|_| Failure::new("format", format!("unknown artifact type {name:?}")))
    }
}

/// What to build. `symbol` holds the text of a symbol file.
#[derive(Debug, Clone)]
pub struct ExampleSpec {
    pub kind: Kind,
    pub n: Option<usize>,
    pub p: u32,
    pub q: usize,
    pub depth: usize,
    pub symbol: Option<String>,
}

impl ExampleSpec {
    /// Reads the parameters an artifact was built with.
    pub fn from_artifact(a: &Artifact) -> Result<Self, Failure> {
        let kind = Kind::from_name(&a.kind)?;
        let get = |key: &str| a.param(key).map(|v| v as usize);
        Ok(ExampleSpec {
            kind,
            n: get("n"),
            p: a.param("p").unwrap_or(2) as u32,
            q: get("q").unwrap_or(2),
            depth: get("depth").unwrap_or(4),
            symbol: a.coxeter.clone(),
        })
    }

    fn n(&self) -> Result<usize, Failure> {
        self.n
            .ok_or_else(|| Failure::new("usage", format!("{} needs --n", self.kind.name())))
    }

    fn params(&self) -> Result<BTreeMap<String, Value>, Failure> {
        let mut params = BTreeMap::new();
        let mut put = |k: &str, v: u64| {
            params.insert(k.to_string(), Value::from(v));
        };
        match self.kind {
            Kind::Flag | Kind::Sp | Kind::Gb => {
                put("n", self.n()? as u64);
                put("p", u64::from(self.p));
            }
            Kind::Arrangement => put("n", self.n()? as u64),
            Kind::Tree => {
                put("q", self.q as u64);
                put("depth", self.depth as u64);
            }
            Kind::Coxeter => {}
        }
        Ok(params)
    }

    fn symbol(&self) -> Result<&str, Failure> {
        self.symbol
            .as_deref()
            .ok_or_else(|| Failure::new("usage", "coxeter needs --symbol"))
    }

    pub fn coxeter_complex(&self) -> Result<Arc<CoxeterComplex>, Failure> {
        let cm = parse_symbol(self.symbol()?)?;
        let system = Arc::new(CoxeterSystem::new(cm, DEFAULT_CAP)?);
        Ok(Arc::new(CoxeterComplex::new(system)?))
    }

    pub fn tree(&self) -> Result<TruncatedTree, Failure> {
        Ok(build_tree(self.q, self.depth)?)
    }

    pub fn building(&self) -> Result<WMetricBuilding, Failure> {
        Ok(match self.kind {
            Kind::Flag => build_flag_building(self.n()?, self.p)?.into_building(),
            Kind::Sp => build_sp_building(self.n()?, self.p)?.into_building(),
            Kind::Gb => build_gb_building(self.n()?, self.p)?.into_building(),
            Kind::Coxeter => {
                let cc = self.coxeter_complex()?;
                WMetricBuilding::from_complex(&cc)?
            }
            Kind::Tree => self.tree()?.into_building(),
            Kind::Arrangement => {
                let n = self.n()?;
                let cs = braid_chamber_system(n)?;
                let (complex, map) = coxeter_map(n)?;
                let mut element = vec![0; map.len()];
                for (g, &c) in map.iter().enumerate() {
                    element[c] = g;
                }
                let cc = complex.clone();
                WMetricBuilding::from_fn(cs, complex.system().clone(), move |c, d| {
                    cc.element(cc.delta_index(element[c], element[d]))
                })?
            }
        })
    }

    pub fn artifact(&self) -> Result<Artifact, Failure> {
        Ok(Artifact::from_building(self.kind.name(), self.params()?, &self.building()?))
    }

    /// The apartment system, where one is known.
    pub fn apartments(&self, cs: &ChamberSystem) -> Result<Vec<ApartmentEmbedding>, Failure> {
        let apartments = match self.kind {
            Kind::Flag => build_flag_building(self.n()?, self.p)?.frame_apartments()?,
            Kind::Sp => build_sp_building(self.n()?, self.p)?.apartments().to_vec(),
            Kind::Gb => {
                let (n, p) = (self.n()?, self.p);
                let gb = build_gb_building(n, p)?;
                let fb = build_flag_building(n, p)?;
                let to_flag = gb.flag_map(&fb)?;
                let mut from_flag = vec![0; to_flag.len()];
                for (c, &f) in to_flag.iter().enumerate() {
                    from_flag[f] = c;
                }
                fb.frame_apartments()?
                    .iter()
                    .map(|a| {
                        let map = a.as_slice().iter().map(|&f| from_flag[f]).collect();
                        ApartmentEmbedding::new(a.complex().clone(), cs, map)
                    })
                    .collect::<Result<_, _>>()?
            }
            Kind::Coxeter => {
                let complex = self.coxeter_complex()?;
                let identity = (0..complex.len()).collect();
                vec![ApartmentEmbedding::new(complex, cs, identity)?]
            }
            Kind::Arrangement => {
                let (complex, map) = coxeter_map(self.n()?)?;
                vec![ApartmentEmbedding::new(complex, cs, map)?]
            }
            Kind::Tree => {
                return Err(Failure::new(
                    "unsupported",
                    "a truncated tree has no finite apartments",
                ))
            }
        };
        // re-seat every embedding on the loaded chamber system, which
        // re-validates it there
        apartments
            .iter()
            .map(|a| {
                ApartmentEmbedding::new(a.complex().clone(), cs, a.as_slice().to_vec())
                    .map_err(|e| Failure::new("format", format!("artifact does not match its parameters: {e}")))
            })
            .collect()
    }
}
