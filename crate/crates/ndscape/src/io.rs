//! File formats.
//!
//! * `.ndl` landscapes: line 1 is `NDL 1 <N>`, followed by `2^N` lines, line
//!   `j` holding the fitness of genotype `j` at full round-trip precision.
//! * `.xndl` extended landscapes: line 1 is `XNDL 1 <k>`, followed by `k`
//!   embedded `.ndl` sections, each prefixed by a line holding its line
//!   count.
//! * Distribution `.csv`: a `degree,weight` header then one row per degree
//!   `0..=N`, in order. Lines starting with `#` are comments and skipped.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::distribution::DegreeDistribution;
use crate::error::{Error, Result};
use crate::extension::ExtendedLandscape;
use crate::landscape::Landscape;

struct LineReader<R> {
    inner: R,
    source: String,
    line: usize,
}

impl<R: BufRead> LineReader<R> {
    fn new(inner: R, source: &str) -> Self {
        LineReader {
            inner,
            source: source.to_string(),
            line: 0,
        }
    }

    fn next_line(&mut self) -> Result<Option<String>> {
        let mut buf = String::new();
        let read = self
            .inner
            .read_line(&mut buf)
            .map_err(|e| Error::io(&self.source, e))?;
        if read == 0 {
            return Ok(None);
        }
        self.line += 1;
        while buf.ends_with('\n') || buf.ends_with('\r') {
            buf.pop();
        }
        Ok(Some(buf))
    }

    fn require_line(&mut self, what: &str) -> Result<String> {
        self.next_line()?.ok_or_else(|| {
            Error::format(&self.source, self.line + 1, format!("missing {what}"))
        })
    }

    fn fail(&self, message: impl Into<String>) -> Error {
        Error::format(&self.source, self.line, message)
    }
}

pub fn write_ndl<W: Write>(l: &Landscape, w: &mut W) -> std::io::Result<()> {
    writeln!(w, "NDL 1 {}", l.n_bits())?;
    for v in l.values() {
        writeln!(w, "{v}")?;
    }
    Ok(())
}

pub fn read_ndl<R: BufRead>(r: R, source: &str) -> Result<Landscape> {
    let mut lines = LineReader::new(r, source);
    let landscape = read_ndl_section(&mut lines)?;
    if lines.next_line()?.is_some() {
        return Err(lines.fail("trailing content after the fitness table"));
    }
    Ok(landscape)
}

fn read_ndl_section<R: BufRead>(lines: &mut LineReader<R>) -> Result<Landscape> {
    let header = lines.require_line("NDL header")?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let n_bits = match fields.as_slice() {
        ["NDL", "1", n] => n
            .parse::<u32>()
            .map_err(|_| lines.fail(format!("bad bit count {n:?}")))?,
        _ => return Err(lines.fail(format!("expected `NDL 1 <N>`, got {header:?}"))),
    };
    if n_bits < 1 || n_bits > crate::landscape::MAX_BITS {
        return Err(lines.fail(format!("unsupported bit count {n_bits}")));
    }
    let size = 1usize << n_bits;
    let mut fitness = Vec::with_capacity(size);
    for j in 0..size {
        let line = lines.require_line(&format!("fitness value {j} of {size}"))?;
        let v: f64 = line
            .trim()
            .parse()
            .map_err(|_| lines.fail(format!("bad fitness value {line:?}")))?;
        fitness.push(v);
    }
    Landscape::new(n_bits, fitness)
}

pub fn load_ndl(path: impl AsRef<Path>) -> Result<Landscape> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    read_ndl(BufReader::new(file), &path.display().to_string())
}

pub fn save_ndl(l: &Landscape, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let mut w = BufWriter::new(file);
    write_ndl(l, &mut w).map_err(|e| Error::io(path.display().to_string(), e))
}

pub fn write_xndl<W: Write>(ext: &ExtendedLandscape, w: &mut W) -> std::io::Result<()> {
    writeln!(w, "XNDL 1 {}", ext.components().len())?;
    for c in ext.components() {
        writeln!(w, "{}", c.size() + 1)?;
        write_ndl(c, w)?;
    }
    Ok(())
}

pub fn read_xndl<R: BufRead>(r: R, source: &str) -> Result<ExtendedLandscape> {
    let mut lines = LineReader::new(r, source);
    let header = lines.require_line("XNDL header")?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let count = match fields.as_slice() {
        ["XNDL", "1", k] => k
            .parse::<usize>()
            .map_err(|_| lines.fail(format!("bad component count {k:?}")))?,
        _ => return Err(lines.fail(format!("expected `XNDL 1 <k>`, got {header:?}"))),
    };
    let mut components = Vec::with_capacity(count);
    for _ in 0..count {
        let count_line = lines.require_line("section line count")?;
        let expected: usize = count_line
            .trim()
            .parse()
            .map_err(|_| lines.fail(format!("bad section line count {count_line:?}")))?;
        let before = lines.line;
        let component = read_ndl_section(&mut lines)?;
        let consumed = lines.line - before;
        if consumed != expected {
            return Err(lines.fail(format!(
                "section declared {expected} lines but spans {consumed}"
            )));
        }
        components.push(component);
    }
    if lines.next_line()?.is_some() {
        return Err(lines.fail("trailing content after the last section"));
    }
    ExtendedLandscape::new(components)
}

pub fn load_xndl(path: impl AsRef<Path>) -> Result<ExtendedLandscape> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    read_xndl(BufReader::new(file), &path.display().to_string())
}

pub fn save_xndl(ext: &ExtendedLandscape, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let mut w = BufWriter::new(file);
    write_xndl(ext, &mut w).map_err(|e| Error::io(path.display().to_string(), e))
}

/// Writes a distribution as `degree,weight` rows, after an optional leading
/// `#` comment line.
pub fn write_distribution<W: Write>(
    d: &DegreeDistribution,
    w: &mut W,
    comment: Option<&str>,
) -> std::io::Result<()> {
    if let Some(comment) = comment {
        writeln!(w, "# {comment}")?;
    }
    writeln!(w, "degree,weight")?;
    for (degree, weight) in d.weights().iter().enumerate() {
        writeln!(w, "{degree},{weight}")?;
    }
    Ok(())
}

pub fn read_distribution<R: BufRead>(r: R, source: &str) -> Result<DegreeDistribution> {
    let mut lines = LineReader::new(r, source);
    let mut weights = Vec::new();
    let mut saw_header = false;
    while let Some(line) = lines.next_line()? {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if !saw_header {
            if trimmed != "degree,weight" {
                return Err(lines.fail(format!(
                    "expected `degree,weight` header, got {trimmed:?}"
                )));
            }
            saw_header = true;
            continue;
        }
        let (degree_str, weight_str) = trimmed
            .split_once(',')
            .ok_or_else(|| lines.fail(format!("expected `degree,weight` row, got {trimmed:?}")))?;
        let degree: usize = degree_str
            .trim()
            .parse()
            .map_err(|_| lines.fail(format!("bad degree {degree_str:?}")))?;
        if degree != weights.len() {
            return Err(lines.fail(format!(
                "degree rows must be consecutive from 0, expected {} got {degree}",
                weights.len()
            )));
        }
        let weight: f64 = weight_str
            .trim()
            .parse()
            .map_err(|_| lines.fail(format!("bad weight {weight_str:?}")))?;
        weights.push(weight);
    }
    if !saw_header {
        return Err(lines.fail("missing `degree,weight` header"));
    }
    if weights.is_empty() {
        return Err(lines.fail("distribution has no rows"));
    }
    DegreeDistribution::new(weights)
}

pub fn load_distribution(path: impl AsRef<Path>) -> Result<DegreeDistribution> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    read_distribution(BufReader::new(file), &path.display().to_string())
}

pub fn save_distribution(
    d: &DegreeDistribution,
    path: impl AsRef<Path>,
    comment: Option<&str>,
) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let mut w = BufWriter::new(file);
    write_distribution(d, &mut w, comment).map_err(|e| Error::io(path.display().to_string(), e))
}
