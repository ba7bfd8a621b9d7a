//! Evaluation of decorated closed surfaces as words in the tube generators.
//!
//! A closed genus `g` surface with punctures `λ_1, …, λ_s` is the composite
//! `D† ∘ L_{λ_s} ∘ … ∘ L_{λ_1} ∘ L^g ∘ D`. Given the matrices of the tube
//! operators on a finitely generated coefficient module, its E-polynomial is
//! the scalar `disc_out · M_t ⋯ M_1 · disc_in` divided by `e(G)^t`, where `t`
//! counts the tubes in the word.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{dot, PolyMatrix};
use crate::poly::LaurentPoly;

/// One tube between the two caps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tube {
    /// Once-holed torus tube.
    L,
    /// Plain cylinder.
    P,
    /// Cylinder with one marked point decorated by the named subset.
    Puncture(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TubeWord {
    pub generators: Vec<Tube>,
}

impl TubeWord {
    pub fn new(generators: Vec<Tube>) -> Self {
        TubeWord { generators }
    }

    pub fn tube_count(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

impl std::fmt::Display for TubeWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("[")?;
        for (i, t) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            match t {
                Tube::L => f.write_str("L")?,
                Tube::P => f.write_str("P")?,
                Tube::Puncture(l) => write!(f, "L_{l}")?,
            }
        }
        f.write_str("]")
    }
}

/// Genus plus ordered puncture labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SurfaceSpec {
    pub genus: u32,
    pub punctures: Vec<String>,
}

impl SurfaceSpec {
    pub fn closed(genus: u32) -> Self {
        SurfaceSpec { genus, punctures: Vec::new() }
    }

    pub fn new(genus: u32, punctures: impl IntoIterator<Item = impl Into<String>>) -> Self {
        SurfaceSpec { genus, punctures: punctures.into_iter().map(Into::into).collect() }
    }
}

impl std::fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "g={}", self.genus)?;
        if !self.punctures.is_empty() {
            write!(f, " punctures=[{}]", self.punctures.join(", "))?;
        }
        Ok(())
    }
}

/// `L` repeated `genus` times followed by the punctures in listed order.
pub fn assemble_word(spec: &SurfaceSpec) -> TubeWord {
    let mut generators = vec![Tube::L; spec.genus as usize];
    generators.extend(spec.punctures.iter().cloned().map(Tube::Puncture));
    TubeWord { generators }
}

/// Appends `k` plain cylinders.
pub fn insert_identity_tubes(word: &TubeWord, k: usize) -> TubeWord {
    let mut generators = word.generators.clone();
    generators.extend(std::iter::repeat_n(Tube::P, k));
    TubeWord { generators }
}

/// Tube operators on a rank `r` coefficient module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TqftDatum {
    rank: usize,
    e_g: LaurentPoly,
    genus_tube: PolyMatrix,
    puncture_tubes: BTreeMap<String, PolyMatrix>,
    identity_tube: Option<PolyMatrix>,
    disc_in: Vec<LaurentPoly>,
    disc_out: Vec<LaurentPoly>,
}

impl TqftDatum {
    /// Validates dimensions, `e_G ≠ 0`, `disc_out · disc_in = 1` and, when a
    /// P tube is present, `disc_out · P · disc_in = e_G`.
    pub fn new(
        e_g: LaurentPoly,
        genus_tube: PolyMatrix,
        puncture_tubes: BTreeMap<String, PolyMatrix>,
        identity_tube: Option<PolyMatrix>,
        disc_in: Vec<LaurentPoly>,
        disc_out: Vec<LaurentPoly>,
    ) -> Result<Self> {
        let rank = disc_in.len();
        let invalid = |msg: String| Err(Error::InvalidDatum(msg));
        if rank == 0 {
            return invalid("rank must be positive".into());
        }
        if disc_out.len() != rank {
            return invalid(format!("disc_out has length {}, rank is {rank}", disc_out.len()));
        }
        let check = |name: &str, m: &PolyMatrix| {
            if m.rows() != rank || m.cols() != rank {
                Err(Error::InvalidDatum(format!("{name} is {}x{}, rank is {rank}", m.rows(), m.cols())))
            } else {
                Ok(())
            }
        };
        check("L", &genus_tube)?;
        for (label, m) in &puncture_tubes {
            check(&format!("puncture {label:?}"), m)?;
        }
        if let Some(p) = &identity_tube {
            check("P", p)?;
        }
        if e_g.is_zero() {
            return invalid("e_G is zero".into());
        }
        let sphere = dot(&disc_out, &disc_in);
        if !sphere.is_one() {
            return invalid(format!("disc_out . disc_in = {sphere}, expected 1"));
        }
        if let Some(p) = &identity_tube {
            let cyl = dot(&disc_out, &p.mul_vec(&disc_in));
            if cyl != e_g {
                return invalid(format!("disc_out . P . disc_in = {cyl}, expected e_G = {e_g}"));
            }
        }
        Ok(TqftDatum { rank, e_g, genus_tube, puncture_tubes, identity_tube, disc_in, disc_out })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn e_g(&self) -> &LaurentPoly {
        &self.e_g
    }

    pub fn genus_tube(&self) -> &PolyMatrix {
        &self.genus_tube
    }

    pub fn puncture_tubes(&self) -> &BTreeMap<String, PolyMatrix> {
        &self.puncture_tubes
    }

    pub fn identity_tube(&self) -> Option<&PolyMatrix> {
        self.identity_tube.as_ref()
    }

    pub fn disc_in(&self) -> &[LaurentPoly] {
        &self.disc_in
    }

    pub fn disc_out(&self) -> &[LaurentPoly] {
        &self.disc_out
    }

    pub fn with_puncture(mut self, label: impl Into<String>, tube: PolyMatrix) -> Result<Self> {
        self.puncture_tubes.insert(label.into(), tube);
        Self::new(self.e_g, self.genus_tube, self.puncture_tubes, self.identity_tube, self.disc_in, self.disc_out)
    }

    fn tube(&self, t: &Tube) -> Result<&PolyMatrix> {
        match t {
            Tube::L => Ok(&self.genus_tube),
            Tube::P => self.identity_tube.as_ref().ok_or(Error::MissingIdentityTube),
            Tube::Puncture(l) => self.puncture_tubes.get(l).ok_or_else(|| Error::UnknownPunctureLabel(l.clone())),
        }
    }

    /// The unnormalised scalar `disc_out · M_t ⋯ M_1 · disc_in`. Runs of `L`
    /// are raised to a power by squaring before acting on the vector.
    pub fn evaluate_raw(&self, word: &TubeWord) -> Result<LaurentPoly> {
        // resolve every label before doing any arithmetic
        for t in &word.generators {
            self.tube(t)?;
        }
        let mut state = self.disc_in.clone();
        let gens = &word.generators;
        let mut i = 0;
        while i < gens.len() {
            if gens[i] == Tube::L {
                let run = gens[i..].iter().take_while(|t| **t == Tube::L).count();
                state = self.genus_tube.pow(run as u32).mul_vec(&state);
                i += run;
            } else {
                state = self.tube(&gens[i])?.mul_vec(&state);
                i += 1;
            }
        }
        Ok(dot(&self.disc_out, &state))
    }

    /// `evaluate_raw(word) / e_G^t` for a word with `t` tubes.
    pub fn evaluate_normalized(&self, word: &TubeWord) -> Result<LaurentPoly> {
        let raw = self.evaluate_raw(word)?;
        let norm = self.e_g.pow(word.tube_count() as u32);
        raw.exact_div(&norm).map_err(|e| match e {
            Error::NonExactDivision(_) => Error::NonExactDivision(format!(
                "e_G^{} = {norm} does not divide the raw value {raw} of word {word}",
                word.tube_count()
            )),
            other => other,
        })
    }

    /// E-polynomial of the representation variety of the decorated surface.
    pub fn epoly_rep_variety(&self, spec: &SurfaceSpec) -> Result<LaurentPoly> {
        self.evaluate_normalized(&assemble_word(spec))
    }

    pub fn to_file(&self) -> DatumFile {
        let text = |v: &[LaurentPoly]| v.iter().map(|p| p.to_uv_string()).collect::<Vec<_>>();
        let mat = |m: &PolyMatrix| (0..m.rows()).map(|i| text(m.row(i))).collect::<Vec<_>>();
        DatumFile {
            rank: self.rank,
            e_g: self.e_g.to_uv_string(),
            genus: mat(&self.genus_tube),
            identity: self.identity_tube.as_ref().map(mat),
            punctures: self.puncture_tubes.iter().map(|(k, m)| (k.clone(), mat(m))).collect(),
            disc_in: text(&self.disc_in),
            disc_out: text(&self.disc_out),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("datum serializes")
    }

    pub fn from_json(json: &str) -> Result<Self> {
        serde_json::from_str::<DatumFile>(json)?.into_datum()
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

/// On-disk datum: polynomials are strings in the text format, matrices are
/// lists of rows.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DatumFile {
    pub rank: usize,
    #[serde(rename = "e_G")]
    pub e_g: String,
    #[serde(rename = "L")]
    pub genus: Vec<Vec<String>>,
    #[serde(rename = "P", default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub punctures: BTreeMap<String, Vec<Vec<String>>>,
    pub disc_in: Vec<String>,
    pub disc_out: Vec<String>,
}

impl DatumFile {
    pub fn into_datum(self) -> Result<TqftDatum> {
        let polys = |v: &[String]| v.iter().map(|s| s.parse()).collect::<Result<Vec<LaurentPoly>>>();
        let mat = |name: &str, rows: &[Vec<String>]| -> Result<PolyMatrix> {
            let rows = rows.iter().map(|r| polys(r)).collect::<Result<Vec<_>>>()?;
            PolyMatrix::from_rows(rows).ok_or_else(|| Error::InvalidDatum(format!("{name} has rows of unequal length")))
        };
        let datum = TqftDatum::new(
            self.e_g.parse()?,
            mat("L", &self.genus)?,
            self.punctures
                .iter()
                .map(|(k, m)| Ok((k.clone(), mat(&format!("puncture {k:?}"), m)?)))
                .collect::<Result<_>>()?,
            self.identity.as_deref().map(|m| mat("P", m)).transpose()?,
            polys(&self.disc_in)?,
            polys(&self.disc_out)?,
        )?;
        if datum.rank() != self.rank {
            return Err(Error::InvalidDatum(format!(
                "declared rank {} but vectors have length {}",
                self.rank,
                datum.rank()
            )));
        }
        Ok(datum)
    }
}
