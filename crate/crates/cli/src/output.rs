use std::fmt::Display;
use std::io::{self, Write};

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Comma-separated values on one line.
    Plain,
    /// Header `n,value`, then one row per term.
    Csv,
    /// One `{"index": n, "value": "..."}` object per line.
    JsonLines,
    /// OEIS b-file: `n value` per line.
    Bfile,
}

/// Writes terms one at a time so large outputs never need buffering.
pub struct TermWriter<W: Write> {
    out: W,
    format: OutputFormat,
    index: usize,
}

impl<W: Write> TermWriter<W> {
    pub fn new(mut out: W, format: OutputFormat) -> io::Result<Self> {
        if format == OutputFormat::Csv {
            writeln!(out, "n,value")?;
        }
        Ok(TermWriter {
            out,
            format,
            index: 0,
        })
    }

    pub fn push(&mut self, value: &impl Display) -> io::Result<()> {
        let n = self.index;
        match self.format {
            OutputFormat::Plain => {
                if n > 0 {
                    self.out.write_all(b",")?;
                }
                write!(self.out, "{value}")?;
            }
            OutputFormat::Csv => writeln!(self.out, "{n},{value}")?,
            OutputFormat::JsonLines => {
                let record = serde_json::json!({ "index": n, "value": value.to_string() });
                writeln!(self.out, "{record}")?;
            }
            OutputFormat::Bfile => writeln!(self.out, "{n} {value}")?,
        }
        self.index += 1;
        Ok(())
    }

    pub fn finish(mut self) -> io::Result<W> {
        if self.format == OutputFormat::Plain {
            writeln!(self.out)?;
        }
        self.out.flush()?;
        Ok(self.out)
    }
}
