//! Similarity CSV: an optional header row, then one row per item with
//! `id, cost, sim_0, sim_1, ..., sim_{n-1}`. Ids must cover `0..n`; rows may
//! appear in any order.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::objectives::SimilarityMatrix;

/// Similarity matrix plus the per-item cost column.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityData {
    pub matrix: Arc<SimilarityMatrix>,
    pub costs: Vec<f64>,
}

pub fn read_similarity_csv(path: &Path) -> Result<SimilarityData> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_similarity(file)
}

pub fn read_similarity<R: Read>(reader: R) -> Result<SimilarityData> {
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let mut rows: Vec<(usize, usize, f64, Vec<f64>)> = Vec::new();
    for (idx, record) in csv.records().enumerate() {
        let record = record?;
        let line = record.position().map_or(idx + 1, |p| p.line() as usize);
        if idx == 0 && record.get(1).is_some_and(|c| c.parse::<f64>().is_err()) {
            continue;
        }
        if record.len() < 3 {
            return Err(Error::Parse {
                line,
                message: "expected 'id, cost, similarities...'".into(),
            });
        }
        let num = |i: usize| -> Result<f64> {
            let field = &record[i];
            field.parse::<f64>().map_err(|_| Error::Parse {
                line,
                message: format!("column {i}: '{field}' is not a number"),
            })
        };
        let id = record[0].parse::<usize>().map_err(|_| Error::Parse {
            line,
            message: format!("invalid item id '{}'", &record[0]),
        })?;
        let cost = num(1)?;
        let sims = (2..record.len()).map(num).collect::<Result<Vec<_>>>()?;
        rows.push((line, id, cost, sims));
    }

    let n = rows.len();
    let mut slots: Vec<Option<(f64, Vec<f64>)>> = vec![None; n];
    for (line, id, cost, sims) in rows {
        if sims.len() != n {
            return Err(Error::Parse {
                line,
                message: format!("expected {n} similarity columns, found {}", sims.len()),
            });
        }
        match slots.get_mut(id) {
            Some(slot @ None) => *slot = Some((cost, sims)),
            Some(Some(_)) => {
                return Err(Error::Parse {
                    line,
                    message: format!("item id {id} appears twice"),
                })
            }
            None => {
                return Err(Error::Parse {
                    line,
                    message: format!("item id {id} is outside [0, {n})"),
                })
            }
        }
    }

    let mut costs = Vec::with_capacity(n);
    let mut flat = Vec::with_capacity(n * n);
    for (cost, sims) in slots.into_iter().flatten() {
        costs.push(cost);
        flat.extend(sims);
    }
    Ok(SimilarityData {
        matrix: Arc::new(SimilarityMatrix::new(n, flat)?),
        costs,
    })
}

pub fn write_similarity_csv<W: Write>(data: &SimilarityData, out: W) -> Result<()> {
    let n = data.matrix.n();
    let mut csv = csv::Writer::from_writer(out);
    let mut header = vec!["id".to_string(), "cost".to_string()];
    header.extend((0..n).map(|v| format!("s{v}")));
    csv.write_record(&header)?;
    for u in 0..n {
        let mut row = vec![u.to_string(), data.costs[u].to_string()];
        row.extend(data.matrix.row(u).iter().map(f64::to_string));
        csv.write_record(&row)?;
    }
    csv.flush().map_err(|source| Error::Io {
        path: Default::default(),
        source,
    })?;
    Ok(())
}
