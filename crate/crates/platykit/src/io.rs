//! Streaming graph6 input and output.
//!
//! Input is read one line at a time, so memory use does not grow with the
//! length of the stream. Blank lines are skipped; the optional `>>graph6<<`
//! header is accepted on any line.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::Path;

use platykit_core::graph6::{self, Graph6Error};
use platykit_core::Graph;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// A decoded input line.
#[derive(Debug, Clone)]
pub struct Record {
    /// 1-based line number.
    pub line: usize,
    pub graph: Graph,
}

/// Opens `path`, with `-` meaning standard input.
pub fn open_input(path: &str) -> io::Result<Box<dyn BufRead>> {
    if path == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        Ok(Box::new(BufReader::new(File::open(path)?)))
    }
}

/// Reader that decodes graph6 lines and hashes everything it reads.
pub struct Graph6Reader<R> {
    inner: R,
    line: usize,
    buf: String,
    hasher: Sha256,
    bytes: u64,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(inner: R) -> Self {
        Graph6Reader { inner, line: 0, buf: String::new(), hasher: Sha256::new(), bytes: 0 }
    }

    /// SHA-256 of the bytes consumed so far, in hex.
    pub fn digest(&self) -> String {
        hex::encode(self.hasher.clone().finalize())
    }

    pub fn bytes_read(&self) -> u64 {
        self.bytes
    }

    pub fn lines_read(&self) -> usize {
        self.line
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Record, InputError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.inner.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(k) => {
                    self.bytes += k as u64;
                    self.hasher.update(self.buf.as_bytes());
                }
                Err(e) => return Some(Err(e.into())),
            }
            self.line += 1;
            let text = self.buf.trim();
            if text.is_empty() || text == ">>graph6<<" {
                continue;
            }
            return Some(
                graph6::decode(text)
                    .map(|graph| Record { line: self.line, graph })
                    .map_err(|source| InputError::Parse { line: self.line, source }),
            );
        }
    }
}

/// Applies `f` to every graph in parallel batches of `chunk_len` on `pool`, handing
/// results to `sink` in input order. Parse errors go to `on_error`, which
/// decides whether to continue. Returns the malformed line numbers.
pub fn par_map_stream<T, I, F, S, X>(
    records: I,
    pool: &rayon::ThreadPool,
    chunk_len: usize,
    f: F,
    mut sink: S,
    mut on_error: X,
) -> io::Result<Vec<usize>>
where
    T: Send,
    I: Iterator<Item = Result<Record, InputError>>,
    F: Fn(&Graph) -> T + Sync,
    S: FnMut(Record, T) -> io::Result<()>,
    X: FnMut(&InputError) -> bool,
{
    let chunk_len = chunk_len.max(1);
    let mut malformed = Vec::new();
    let mut records = records.peekable();
    let mut chunk = Vec::with_capacity(chunk_len);
    let mut stop = false;
    while !stop && records.peek().is_some() {
        for rec in records.by_ref() {
            match rec {
                Ok(r) => chunk.push(r),
                Err(InputError::Io(e)) => return Err(e),
                Err(e) => {
                    if let InputError::Parse { line, .. } = e {
                        malformed.push(line);
                    }
                    if !on_error(&e) {
                        stop = true;
                        break;
                    }
                }
            }
            if chunk.len() == chunk_len {
                break;
            }
        }
        let results: Vec<T> = pool.install(|| chunk.par_iter().map(|r| f(&r.graph)).collect());
        for (r, t) in chunk.drain(..).zip(results) {
            sink(r, t)?;
        }
    }
    Ok(malformed)
}

/// Reads a whole graph6 source (string) into graphs.
pub fn read_all<R: Read>(r: R) -> Result<Vec<Graph>, InputError> {
    Graph6Reader::new(BufReader::new(r)).map(|rec| rec.map(|r| r.graph)).collect()
}

pub fn read_file(path: &Path) -> Result<Vec<Graph>, InputError> {
    read_all(File::open(path)?)
}

/// Writes one graph6 line per string.
pub fn write_lines<W: Write, S: AsRef<str>>(mut w: W, lines: impl IntoIterator<Item = S>) -> io::Result<()> {
    for l in lines {
        w.write_all(l.as_ref().as_bytes())?;
        w.write_all(b"\n")?;
    }
    w.flush()
}

/// SHA-256 of a byte string, in hex.
pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
