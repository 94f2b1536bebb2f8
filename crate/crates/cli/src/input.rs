use std::fs;
use std::io::Write;
use std::path::Path;

use hypmetrics_core::{Domain, Point};

use crate::CliError;

pub fn read_domain(path: &Path) -> Result<Domain, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::malformed(format!("cannot read {}: {e}", path.display())))?;
    Ok(Domain::from_json(&text)?)
}

/// Parses `"x0,x1[,x2]"`.
pub fn parse_point(text: &str) -> Result<Point, CliError> {
    let coords = text
        .split(',')
        .map(|c| c.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::malformed(format!("bad point {text:?}: {e}")))?;
    Ok(Point::new(&coords)?)
}

/// Parses an inline pair `"x0,x1;y0,y1"`.
pub fn parse_inline_pair(text: &str) -> Result<(Point, Point), CliError> {
    let (a, b) = text
        .split_once(';')
        .ok_or_else(|| CliError::malformed(format!("pair {text:?} must look like \"x0,x1;y0,y1\"")))?;
    Ok((parse_point(a)?, parse_point(b)?))
}

/// Reads a pairs CSV with header `x0,x1[,x2],y0,y1[,y2]`.
pub fn read_pairs(path: &Path) -> Result<Vec<(Point, Point)>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(path)
        .map_err(|e| CliError::malformed(format!("cannot read {}: {e}", path.display())))?;
    let header: Vec<String> = reader
        .headers()
        .map_err(|e| CliError::malformed(e.to_string()))?
        .iter()
        .map(str::to_owned)
        .collect();
    let dim = header.len() / 2;
    let expected: Vec<String> = ["x", "y"]
        .iter()
        .flat_map(|p| (0..dim).map(move |i| format!("{p}{i}")))
        .collect();
    if !(2..=3).contains(&dim) || header != expected {
        return Err(CliError::malformed(format!(
            "pairs header must be x0,x1[,x2],y0,y1[,y2], got {}",
            header.join(",")
        )));
    }
    let mut pairs = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::malformed(e.to_string()))?;
        let vals = record
            .iter()
            .map(str::parse::<f64>)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::malformed(format!("row {}: {e}", line + 2)))?;
        if vals.len() != 2 * dim {
            return Err(CliError::malformed(format!("row {} has {} fields", line + 2, vals.len())));
        }
        pairs.push((Point::new(&vals[..dim])?, Point::new(&vals[dim..])?));
    }
    Ok(pairs)
}

pub fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::malformed(format!("cannot write {}: {e}", p.display()))),
        None => {
            emit(text);
            Ok(())
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
pub fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_and_pairs() {
        assert_eq!(parse_point(" 0.5, -1").unwrap().coords(), &[0.5, -1.0]);
        assert!(parse_point("1").is_err());
        assert!(parse_point("a,b").is_err());
        let (x, y) = parse_inline_pair("0,0;0.5,0").unwrap();
        assert_eq!((x.dim(), y.coords()[0]), (2, 0.5));
        assert!(parse_inline_pair("0,0").is_err());
    }
}
