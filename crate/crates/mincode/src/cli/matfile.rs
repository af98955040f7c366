//! Generator matrix file format.
//!
//! Line 1: `q n k` in decimal. Then k lines of n space-separated element
//! codes in [0, q). Lines starting with `#` are comments; blank lines and
//! trailing whitespace are ignored. Extension-field elements use the integer
//! code of the galois module, so files are bit-exact across runs.

use std::io::Write;
use std::sync::Arc;

use crate::codes::LinearCode;
use crate::galois::shared_field;
use crate::linalg::Matrix;
use crate::{Error, Result};

pub fn write_code(code: &LinearCode, w: &mut impl Write) -> std::io::Result<()> {
    writeln!(w, "{} {} {}", code.q(), code.n(), code.k())?;
    for r in 0..code.k() {
        let row = code.generator().row(r);
        let mut line = String::with_capacity(2 * row.len());
        for (i, &e) in row.iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            line.push_str(&e.to_string());
        }
        writeln!(w, "{line}")?;
    }
    Ok(())
}

pub fn parse_code(text: &str, cap: u64) -> Result<LinearCode> {
    let mut header: Option<(u64, usize, usize, usize)> = None; // q, n, k, line
    let mut rows: Vec<Vec<u16>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let fields: Vec<&str> = line.split_whitespace().collect();
                if fields.len() != 3 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("header must be `q n k`, got {} fields", fields.len()),
                    });
                }
                let q = parse_int(fields[0], line_no, "q")?;
                let n = parse_int(fields[1], line_no, "n")? as usize;
                let k = parse_int(fields[2], line_no, "k")? as usize;
                if n == 0 || k == 0 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "n and k must be positive".into(),
                    });
                }
                header = Some((q, n, k, line_no));
            }
            Some((q, n, k, _)) => {
                if rows.len() == k {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected exactly {k} matrix rows, found extra data"),
                    });
                }
                let mut row = Vec::with_capacity(n);
                for tok in line.split_whitespace() {
                    let v = parse_int(tok, line_no, "entry")?;
                    if v >= q {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("entry {v} is not in [0, {q})"),
                        });
                    }
                    row.push(v as u16);
                }
                if row.len() != n {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("row has {} entries, expected n = {n}", row.len()),
                    });
                }
                rows.push(row);
            }
        }
    }
    let Some((q, _, k, hline)) = header else {
        return Err(Error::Parse {
            line: 1,
            msg: "missing header line `q n k`".into(),
        });
    };
    if rows.len() != k {
        return Err(Error::Parse {
            line: hline,
            msg: format!("expected {k} matrix rows, found {}", rows.len()),
        });
    }
    let field = shared_field(q)?;
    LinearCode::from_generator_with_cap(Matrix::from_rows(Arc::clone(&field), &rows), cap)
}

fn parse_int(tok: &str, line: usize, what: &str) -> Result<u64> {
    tok.parse::<u64>().map_err(|_| Error::Parse {
        line,
        msg: format!("invalid {what}: {tok:?}"),
    })
}
