//! The on-disk JSON form of a product basis.

use std::fs;
use std::io;
use std::path::Path;

use prodbasis::constructions::{Family, ProductBasis, ProductState};
use prodbasis::winding::{SubspacePair, WindingMove};
use prodbasis::{ComplexMatrix, ComplexVector};
use serde::{Deserialize, Serialize};

use crate::decimal::{amplitude, complex, Amplitude};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("malformed basis file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format_version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error("invalid basis file: {0}")]
    Invalid(#[from] prodbasis::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateRecord {
    pub label: String,
    pub a: Vec<Amplitude>,
    pub b: Vec<Amplitude>,
    /// `[column, row]` pairs: column is the A index, row the B index.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tile_cells: Option<Vec<[usize; 2]>>,
}

/// One winding move: orthonormal bases of the two local subspaces and the
/// local unitaries (row-major) acting in those coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveRecord {
    pub split_a: Vec<Vec<Amplitude>>,
    pub split_b: Vec<Vec<Amplitude>>,
    pub u_a: Vec<Vec<Amplitude>>,
    pub u_b: Vec<Vec<Amplitude>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisFile {
    pub format_version: u32,
    pub dims: [usize; 2],
    pub family: String,
    pub states: Vec<StateRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub provenance: Vec<MoveRecord>,
}

fn vector_record(v: &ComplexVector) -> Vec<Amplitude> {
    v.entries().iter().copied().map(amplitude).collect()
}

fn vector_from(record: &[Amplitude]) -> ComplexVector {
    ComplexVector::new(record.iter().map(complex).collect())
}

fn matrix_record(m: &ComplexMatrix) -> Vec<Vec<Amplitude>> {
    m.data()
        .chunks(m.cols().max(1))
        .map(|row| row.iter().copied().map(amplitude).collect())
        .collect()
}

fn matrix_from(rows: &[Vec<Amplitude>]) -> Result<ComplexMatrix, LoadError> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(
            prodbasis::Error::DimensionMismatch("move unitary is not square".into()).into(),
        );
    }
    Ok(ComplexMatrix::from_row_major(
        n,
        n,
        rows.iter().flatten().map(complex).collect(),
    ))
}

impl MoveRecord {
    pub fn from_move(mv: &WindingMove) -> Self {
        Self {
            split_a: mv.split.a_basis.iter().map(vector_record).collect(),
            split_b: mv.split.b_basis.iter().map(vector_record).collect(),
            u_a: matrix_record(&mv.u_a),
            u_b: matrix_record(&mv.u_b),
        }
    }

    pub fn to_move(&self) -> Result<WindingMove, LoadError> {
        let split = SubspacePair::new(
            self.split_a.iter().map(|v| vector_from(v)).collect(),
            self.split_b.iter().map(|v| vector_from(v)).collect(),
        )?;
        Ok(WindingMove::new(
            split,
            matrix_from(&self.u_a)?,
            matrix_from(&self.u_b)?,
        )?)
    }
}

impl BasisFile {
    pub fn from_basis(basis: &ProductBasis) -> Self {
        let states = basis
            .states()
            .iter()
            .map(|s| StateRecord {
                label: s.label.clone(),
                a: vector_record(&s.a),
                b: vector_record(&s.b),
                tile_cells: s
                    .tile_cells
                    .as_ref()
                    .map(|cells| cells.iter().map(|&(c, r)| [c, r]).collect()),
            })
            .collect();
        Self {
            format_version: FORMAT_VERSION,
            dims: [basis.d_a(), basis.d_b()],
            family: basis.family().as_str().to_owned(),
            states,
            provenance: basis.provenance.iter().map(MoveRecord::from_move).collect(),
        }
    }

    pub fn to_basis(&self) -> Result<ProductBasis, LoadError> {
        if self.format_version != FORMAT_VERSION {
            return Err(LoadError::Version(self.format_version));
        }
        let family: Family = self.family.parse()?;
        let [d_a, d_b] = self.dims;
        let mut states = Vec::with_capacity(self.states.len());
        for record in &self.states {
            let mut state = ProductState::new(
                vector_from(&record.a),
                vector_from(&record.b),
                record.label.clone(),
            )?;
            if let Some(cells) = &record.tile_cells {
                state = state.with_tile_cells(cells.iter().map(|&[c, r]| (c, r)).collect());
            }
            states.push(state);
        }
        let mut basis = ProductBasis::new(d_a, d_b, states, family)?;
        for record in &self.provenance {
            basis.provenance.push(record.to_move()?);
        }
        Ok(basis)
    }

    pub fn to_json(&self) -> String {
        // Every float is finite by construction of the library types.
        crate::json::to_pretty(self).expect("basis amplitudes are finite")
    }

    pub fn from_json(text: &str) -> Result<Self, LoadError> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn save_basis(basis: &ProductBasis, path: &Path) -> io::Result<()> {
    fs::write(path, BasisFile::from_basis(basis).to_json())
}

pub fn load_basis(path: &Path) -> Result<ProductBasis, LoadError> {
    let text = fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    BasisFile::from_json(&text)?.to_basis()
}
