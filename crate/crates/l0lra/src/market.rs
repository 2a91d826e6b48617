//! MatrixMarket coordinate format, read and write.
//!
//! Real matrices use the header `%%MatrixMarket matrix coordinate real
//! general`, binary ones `%%MatrixMarket matrix coordinate pattern general`.
//! Indices are 1-based; comment lines beginning `%` are skipped. The writer
//! emits entries in column-major order so equal matrices serialize to
//! identical bytes.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::matrix::{MatrixKind, SparseMatrix};

pub fn write_matrix<W: Write>(a: &SparseMatrix, out: &mut W) -> Result<()> {
    let pattern = a.kind() == MatrixKind::Binary;
    if pattern {
        writeln!(out, "%%MatrixMarket matrix coordinate pattern general")?;
    } else {
        writeln!(out, "%%MatrixMarket matrix coordinate real general")?;
    }
    writeln!(out, "{} {} {}", a.nrows(), a.ncols(), a.total_nnz())?;
    for j in 0..a.ncols() {
        for &(i, v) in a.col_raw(j) {
            if pattern {
                writeln!(out, "{} {}", i + 1, j + 1)?;
            } else {
                writeln!(out, "{} {} {}", i + 1, j + 1, v)?;
            }
        }
    }
    Ok(())
}

pub fn write_file<P: AsRef<Path>>(a: &SparseMatrix, path: P) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_matrix(a, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn read_matrix<R: Read>(input: R) -> Result<SparseMatrix> {
    let mut lines = BufReader::new(input).lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty MatrixMarket input".into()))??;
    let tokens: Vec<String> = header
        .split_whitespace()
        .map(|t| t.to_ascii_lowercase())
        .collect();
    if tokens.len() < 5 || !tokens[0].starts_with("%%matrixmarket") {
        return Err(Error::Parse(format!("bad MatrixMarket header: {header}")));
    }
    if tokens[1] != "matrix" || tokens[2] != "coordinate" || tokens[4] != "general" {
        return Err(Error::Parse(format!(
            "unsupported MatrixMarket layout: {header}"
        )));
    }
    let field = tokens[3].clone();
    let pattern = match field.as_str() {
        "pattern" => true,
        "real" | "integer" => false,
        other => return Err(Error::Parse(format!("unsupported field type: {other}"))),
    };

    let mut size_line = None;
    for line in lines.by_ref() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        size_line = Some(trimmed.to_string());
        break;
    }
    let size_line = size_line.ok_or_else(|| Error::Parse("missing size line".into()))?;
    let dims: Vec<usize> = size_line
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|e| Error::Parse(format!("size line: {e}")))
        })
        .collect::<Result<_>>()?;
    if dims.len() != 3 {
        return Err(Error::Parse(format!("bad size line: {size_line}")));
    }
    let (m, n, nnz) = (dims[0], dims[1], dims[2]);

    let mut entries: Vec<(usize, usize, f64)> = Vec::with_capacity(nnz);
    for line in lines {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let expected = if pattern { 2 } else { 3 };
        if fields.len() != expected {
            return Err(Error::Parse(format!("bad entry line: {trimmed}")));
        }
        let i: usize = fields[0]
            .parse()
            .map_err(|e| Error::Parse(format!("row index: {e}")))?;
        let j: usize = fields[1]
            .parse()
            .map_err(|e| Error::Parse(format!("col index: {e}")))?;
        if i == 0 || j == 0 {
            return Err(Error::Parse(format!("indices are 1-based: {trimmed}")));
        }
        let v = if pattern {
            1.0
        } else {
            fields[2]
                .parse::<f64>()
                .map_err(|e| Error::Parse(format!("value: {e}")))?
        };
        entries.push((i - 1, j - 1, v));
    }
    if entries.len() != nnz {
        return Err(Error::Parse(format!(
            "size line promised {nnz} entries, found {}",
            entries.len()
        )));
    }
    if pattern {
        let cells: Vec<(usize, usize)> = entries.iter().map(|&(i, j, _)| (i, j)).collect();
        SparseMatrix::from_binary_triplets(m, n, &cells)
    } else {
        SparseMatrix::from_triplets(m, n, &entries)
    }
}

pub fn read_file<P: AsRef<Path>>(path: P) -> Result<SparseMatrix> {
    read_matrix(File::open(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::l0_distance_exact;

    #[test]
    fn real_round_trip() {
        let a =
            SparseMatrix::from_triplets(3, 4, &[(0, 0, 1.5), (2, 1, -2.0), (1, 3, 0.25)]).unwrap();
        let mut buf = Vec::new();
        write_matrix(&a, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("%%MatrixMarket matrix coordinate real general"));
        let b = read_matrix(buf.as_slice()).unwrap();
        assert_eq!(b.kind(), MatrixKind::Real);
        assert_eq!(l0_distance_exact(&a, &b).unwrap(), 0);
    }

    #[test]
    fn pattern_round_trip() {
        let a = SparseMatrix::from_binary_triplets(2, 3, &[(0, 0), (1, 2)]).unwrap();
        let mut buf = Vec::new();
        write_matrix(&a, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("%%MatrixMarket matrix coordinate pattern general"));
        let b = read_matrix(buf.as_slice()).unwrap();
        assert!(b.is_binary());
        assert_eq!(l0_distance_exact(&a, &b).unwrap(), 0);
    }

    #[test]
    fn comments_and_integer_field_accepted() {
        let text =
            "%%MatrixMarket matrix coordinate integer general\n% a comment\n2 2 2\n1 1 3\n2 2 -1\n";
        let a = read_matrix(text.as_bytes()).unwrap();
        assert_eq!(a.entry(0, 0).unwrap(), 3.0);
        assert_eq!(a.entry(1, 1).unwrap(), -1.0);
    }

    #[test]
    fn bad_header_rejected() {
        assert!(read_matrix("garbage\n1 1 0\n".as_bytes()).is_err());
        let arr = "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n";
        assert!(read_matrix(arr.as_bytes()).is_err());
    }

    #[test]
    fn entry_count_mismatch_rejected() {
        let text = "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 3\n";
        assert!(read_matrix(text.as_bytes()).is_err());
    }

    #[test]
    fn writer_is_deterministic() {
        let a =
            SparseMatrix::from_triplets(3, 3, &[(2, 0, 1.0), (0, 0, 2.0), (1, 2, 3.5)]).unwrap();
        let mut b1 = Vec::new();
        let mut b2 = Vec::new();
        write_matrix(&a, &mut b1).unwrap();
        write_matrix(&a.clone(), &mut b2).unwrap();
        assert_eq!(b1, b2);
    }
}
