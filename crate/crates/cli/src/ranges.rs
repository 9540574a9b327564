//! Set notation for sweep flags: `2..20` (inclusive), `2,3,5` and
//! arithmetic progressions `0,25,...,200`.

pub fn parse_dims(s: &str) -> Result<Vec<usize>, String> {
    if let Some((a, b)) = s.split_once("..") {
        if !b.starts_with('.') && !a.contains(',') {
            let lo: usize = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
            let hi: usize = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
            if lo > hi {
                return Err(format!("empty range {lo}..{hi}"));
            }
            return Ok((lo..=hi).collect());
        }
    }
    let values = parse_list(s)?;
    values
        .into_iter()
        .map(|v| {
            if v >= 0.0 && v.fract() == 0.0 {
                Ok(v as usize)
            } else {
                Err(format!("dimension `{v}` is not a non-negative integer"))
            }
        })
        .collect()
}

pub fn parse_distortions(s: &str) -> Result<Vec<f64>, String> {
    parse_list(s)
}

fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let number = |p: &str| p.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| format!("bad number `{p}`"));
    let mut out = Vec::new();
    let mut k = 0;
    while k < parts.len() {
        if parts[k] == "..." {
            if out.len() < 2 || k + 1 >= parts.len() {
                return Err("`...` needs two values before it and one after".into());
            }
            let step = out[out.len() - 1] - out[out.len() - 2];
            let end = number(parts[k + 1])?;
            if step <= 0.0 || end < out[out.len() - 1] {
                return Err(format!("progression does not increase towards {end}"));
            }
            let start = out[out.len() - 2];
            let first = out.len() - 2;
            out.truncate(first);
            // multiply instead of accumulating so 0,0.1,...,1 lands on 1
            let count = ((end - start) / step + 1e-9).floor() as usize;
            out.extend((0..=count).map(|i| start + step * i as f64));
            if (out[out.len() - 1] - end).abs() > 1e-9 * end.abs().max(1.0) {
                return Err(format!("{end} is not reached by step {step} from {start}"));
            }
            let last = out.len() - 1;
            out[last] = end;
            k += 2;
        } else {
            out.push(number(parts[k])?);
            k += 1;
        }
    }
    if out.is_empty() {
        return Err("empty list".into());
    }
    Ok(out)
}
