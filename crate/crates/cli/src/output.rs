//! Deterministic CSV emission: comma separator, '.' decimal point, LF line
//! endings, header row, 17 significant digits for floats.

use std::io::Write;

pub fn float_cell(v: f64) -> String {
    if v == 0.0 {
        // Avoid the "-0" wart so reruns are byte-identical across paths.
        return "0.0000000000000000e0".into();
    }
    format!("{v:.16e}")
}

pub struct CsvWriter<W: Write> {
    sink: W,
}

impl<W: Write> CsvWriter<W> {
    pub fn new(mut sink: W, header: &[&str]) -> std::io::Result<Self> {
        sink.write_all(header.join(",").as_bytes())?;
        sink.write_all(b"\n")?;
        Ok(CsvWriter { sink })
    }

    pub fn row(&mut self, cells: &[String]) -> std::io::Result<()> {
        self.sink.write_all(cells.join(",").as_bytes())?;
        self.sink.write_all(b"\n")
    }

    pub fn finish(mut self) -> std::io::Result<()> {
        self.sink.flush()
    }
}
