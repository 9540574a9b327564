//! 8-bit PGM (`P2` ASCII and `P5` binary) reading and writing.

use super::{tone_map, GrayImage};
use crate::error::{Error, Result};

pub use PgmEncoding::{Ascii, Binary};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgmEncoding {
    /// `P2`
    Ascii,
    /// `P5`
    Binary,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_space_and_comments(&mut self) {
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b'#' => {
                    while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                c if c.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn token(&mut self) -> Result<&'a str> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Pgm("unexpected end of header".into()));
        }
        std::str::from_utf8(&self.bytes[start..self.pos]).map_err(|_| Error::Pgm("header is not ASCII".into()))
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let tok = self.token()?;
        tok.parse()
            .map_err(|_| Error::Pgm(format!("invalid {what} `{tok}`")))
    }
}

/// Decodes a PGM with maxval at most 255; samples become `value / maxval`.
pub fn read_pgm(bytes: &[u8]) -> Result<GrayImage> {
    let mut cur = Cursor { bytes, pos: 0 };
    let encoding = match cur.token()? {
        "P2" => Ascii,
        "P5" => Binary,
        other => return Err(Error::Pgm(format!("unsupported magic `{other}`"))),
    };
    let width = cur.number("width")?;
    let height = cur.number("height")?;
    let maxval = cur.number("maxval")?;
    if width == 0 || height == 0 {
        return Err(Error::Pgm(format!("empty image {width}x{height}")));
    }
    if maxval == 0 || maxval > 255 {
        return Err(Error::Pgm(format!("maxval {maxval} not in 1..=255")));
    }
    let count = width * height;
    let scale = maxval as f64;
    let raw: Vec<u8> = match encoding {
        Binary => {
            // exactly one whitespace byte separates the header from the raster
            let start = cur.pos + 1;
            let data = bytes
                .get(start..start + count)
                .ok_or_else(|| Error::Pgm(format!("raster truncated: expected {count} bytes")))?;
            data.to_vec()
        }
        Ascii => (0..count)
            .map(|_| {
                let v = cur.number("sample")?;
                u8::try_from(v).map_err(|_| Error::Pgm(format!("sample {v} out of range")))
            })
            .collect::<Result<_>>()?,
    };
    if let Some(&v) = raw.iter().find(|&&v| v as usize > maxval) {
        return Err(Error::Pgm(format!("sample {v} exceeds maxval {maxval}")));
    }
    GrayImage::new(width, height, raw.iter().map(|&v| v as f64 / scale).collect())
}

/// 8-bit sample for a processed pixel: tone-mapped, then rounded.
pub fn quantize(v: f64) -> u8 {
    (tone_map(v) * 255.0).round() as u8
}

/// Encodes with maxval 255 after tone mapping every pixel.
pub fn write_pgm(img: &GrayImage, encoding: PgmEncoding) -> Vec<u8> {
    let samples = img.pixels().iter().map(|&v| quantize(v));
    match encoding {
        Binary => {
            let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
            out.extend(samples);
            out
        }
        Ascii => {
            let mut out = format!("P2\n{} {}\n255\n", img.width(), img.height());
            let samples: Vec<u8> = samples.collect();
            for row in samples.chunks(img.width()) {
                let line: Vec<String> = row.iter().map(u8::to_string).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
            out.into_bytes()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> GrayImage {
        GrayImage::new(3, 2, vec![0.0, 1.0, 0.5, 102.0 / 255.0, 1.5, -0.25]).unwrap()
    }

    #[test]
    fn golden_binary() {
        let bytes = write_pgm(&tiny(), Binary);
        let mut expected = b"P5\n3 2\n255\n".to_vec();
        // 0.5 -> 127.5 rounds away from zero; 1.5 and -0.25 are tone-mapped first
        expected.extend([0, 255, 128, 102, 128, 64]);
        assert_eq!(bytes, expected);
    }

    #[test]
    fn golden_ascii() {
        let bytes = write_pgm(&tiny(), Ascii);
        assert_eq!(bytes, b"P2\n3 2\n255\n0 255 128\n102 128 64\n".to_vec());
    }

    #[test]
    fn read_back_both_encodings() {
        let img = GrayImage::new(2, 2, vec![0.0, 51.0 / 255.0, 1.0, 204.0 / 255.0]).unwrap();
        for enc in [Ascii, Binary] {
            assert_eq!(read_pgm(&write_pgm(&img, enc)).unwrap(), img);
        }
    }

    #[test]
    fn header_comments_and_maxval() {
        let img = read_pgm(b"P2\n# made by hand\n2 1 # trailing\n15\n0 15\n").unwrap();
        assert_eq!(img.pixels(), &[0.0, 1.0]);
    }

    #[test]
    fn malformed_inputs() {
        assert!(read_pgm(b"P6\n1 1\n255\n\0\0\0").is_err());
        assert!(read_pgm(b"P5\n2 2\n255\n\0\0").is_err());
        assert!(read_pgm(b"P2\n1 1\n65535\n0\n").is_err());
        assert!(read_pgm(b"P2\n1 1\n10\n11\n").is_err());
        assert!(read_pgm(b"P2\n2 1\n255\n0\n").is_err());
        assert!(read_pgm(b"").is_err());
    }
}
