//! Fixed-width float rendering shared by the JSON and CSV emitters.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::Formatter;

/// 17 significant digits in scientific notation; `-0` prints as `0`.
pub fn float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

struct Scientific;

impl Formatter for Scientific {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(float(value).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Compact JSON on one line, floats through [`float`], newline-terminated.
pub fn write_json<W: Write, T: Serialize>(out: &mut W, value: &T) -> serde_json::Result<()> {
    let mut ser = serde_json::Serializer::with_formatter(&mut *out, Scientific);
    value.serialize(&mut ser)?;
    out.write_all(b"\n").map_err(serde_json::Error::io)
}

pub fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(float(0.625), "6.2500000000000000e-1");
        assert_eq!(float(-0.0), "0.0000000000000000e0");
        let third = 1.0 / 3.0;
        assert_eq!(float(third).parse::<f64>().unwrap(), third);
    }

    #[test]
    fn json_floats_parse_back() {
        let mut buf = Vec::new();
        write_json(&mut buf, &serde_json::json!({"x": [0.1, 2.0], "n": 3})).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "{\"n\":3,\"x\":[1.0000000000000001e-1,2.0000000000000000e0]}\n"
        );
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back["x"][0].as_f64(), Some(0.1));
    }
}
