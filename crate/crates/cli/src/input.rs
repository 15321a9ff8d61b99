//! JSON input documents and their conversion into library values.

use serde::{Deserialize, Serialize};
use specrec::complex::{Family, OrderFilter, SimplicialComplex};
use specrec::matroid::Matroid;
use specrec::shifted::FamilyPair;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    Complex {
        vertices: Vec<String>,
        facets: Vec<Vec<String>>,
    },
    Matroid(MatroidDoc),
    FamilyPair {
        k: usize,
        ground: Vec<String>,
        #[serde(rename = "K")]
        members: Vec<Vec<String>>,
        #[serde(rename = "Kprime", default)]
        sub_members: Vec<Vec<String>>,
    },
    Filter {
        vertices: Vec<String>,
        minimal: Vec<Vec<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum MatroidDoc {
    Bases { ground: Vec<String>, bases: Vec<Vec<String>> },
    Uniform { r: usize, n: usize },
    Graphic { edges: Vec<(String, String)> },
}

/// A parsed input, validated against the library constructors.
#[derive(Clone, Debug)]
pub enum Input {
    Complex(SimplicialComplex),
    Matroid(Matroid),
    Pair(FamilyPair),
    Filter(OrderFilter),
}

impl Input {
    /// The complex a command acts on: a matroid stands for its independence complex.
    pub fn complex(&self) -> Option<SimplicialComplex> {
        match self {
            Input::Complex(c) => Some(c.clone()),
            Input::Matroid(m) => Some(m.independence_complex()),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Input::Complex(_) => "complex",
            Input::Matroid(_) => "matroid",
            Input::Pair(_) => "family-pair",
            Input::Filter(_) => "filter",
        }
    }
}

impl Document {
    pub fn parse(text: &str) -> Result<Document, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid input document: {e}"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn build(&self) -> Result<Input, String> {
        let err = |e: specrec::Error| e.to_string();
        Ok(match self {
            Document::Complex { vertices, facets } => {
                Input::Complex(SimplicialComplex::from_named_facets(vertices, facets).map_err(err)?)
            }
            Document::Matroid(MatroidDoc::Bases { ground, bases }) => {
                Input::Matroid(Matroid::from_named_bases(ground, bases).map_err(err)?)
            }
            Document::Matroid(MatroidDoc::Uniform { r, n }) => Input::Matroid(Matroid::uniform(*r, *n).map_err(err)?),
            Document::Matroid(MatroidDoc::Graphic { edges }) => Input::Matroid(Matroid::graphic(edges).map_err(err)?),
            Document::FamilyPair { k, ground, members, sub_members } => {
                if *k == 0 {
                    return Err("family pairs need k >= 1".into());
                }
                let fam = Family::from_named(ground, *k, members).map_err(err)?;
                let sub = Family::from_named(ground, k - 1, sub_members).map_err(err)?;
                Input::Pair(FamilyPair::new(fam, sub).map_err(err)?)
            }
            Document::Filter { vertices, minimal } => {
                Input::Filter(OrderFilter::from_named_minimal(vertices, minimal).map_err(err)?)
            }
        })
    }
}
