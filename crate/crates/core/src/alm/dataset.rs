use std::io::{Read, Write};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub inputs: Vec<f64>,
    pub output: f64,
}

/// Multi-input single-output samples sharing one input dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    input_dim: usize,
    samples: Vec<Sample>,
}

impl Dataset {
    pub fn new(input_dim: usize, samples: Vec<Sample>) -> Result<Dataset> {
        if input_dim == 0 {
            return Err(Error::InvalidArgument(
                "input dimension must be positive".into(),
            ));
        }
        for (i, s) in samples.iter().enumerate() {
            if s.inputs.len() != input_dim {
                return Err(Error::InvalidArgument(format!(
                    "sample {i} has {} inputs, expected {input_dim}",
                    s.inputs.len()
                )));
            }
            if !s.output.is_finite() || s.inputs.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidArgument(format!("sample {i} is not finite")));
            }
        }
        Ok(Dataset { input_dim, samples })
    }

    /// Single-input dataset from `(x, y)` pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (f64, f64)>) -> Result<Dataset> {
        let samples = pairs
            .into_iter()
            .map(|(x, y)| Sample {
                inputs: vec![x],
                output: y,
            })
            .collect();
        Dataset::new(1, samples)
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// CSV with a header row `x1,...,xd,y`.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let mut header: Vec<String> = (1..=self.input_dim).map(|i| format!("x{i}")).collect();
        header.push("y".into());
        w.write_record(&header)?;
        for s in &self.samples {
            let record: Vec<String> = s
                .inputs
                .iter()
                .chain(std::iter::once(&s.output))
                .map(|v| v.to_string())
                .collect();
            w.write_record(&record)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("utf-8 csv")
    }

    /// Reads CSV with a header row; the last column is the output.
    pub fn read_csv<R: Read>(reader: R) -> Result<Dataset> {
        let mut r = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(reader);
        let width = r.headers()?.len();
        if width < 2 {
            return Err(Error::parse(
                1,
                "need at least one input column and an output column",
            ));
        }
        let mut samples = Vec::new();
        for (i, record) in r.records().enumerate() {
            let record = record?;
            let line = i + 2;
            let values = record
                .iter()
                .map(|f| {
                    f.parse::<f64>()
                        .map_err(|_| Error::parse(line, format!("bad number {f:?}")))
                })
                .collect::<Result<Vec<f64>>>()?;
            let (output, inputs) = values.split_last().expect("width >= 2");
            samples.push(Sample {
                inputs: inputs.to_vec(),
                output: *output,
            });
        }
        Dataset::new(width - 1, samples)
    }
}
