//! Text and CSV views of command payloads.

use serde_json::Value;

use crate::format::algebraic_value_text;

fn s(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn list(v: &Value) -> Vec<String> {
    v.as_array().map(|a| a.iter().map(s).collect()).unwrap_or_default()
}

fn csv_rows(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for r in rows {
        w.write_record(r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("UTF-8 input")
}

pub fn datum_text(p: &Value) -> String {
    let mut out = String::new();
    for key in [
        "type",
        "rank",
        "dim",
        "weyl_order",
        "positive_roots",
        "fundamental_group_order",
        "highest_root",
        "highest_short_root",
        "dual_permutation",
        "fundamental_dims",
    ] {
        out.push_str(&format!("{key}: {}\n", s(&p[key])));
    }
    out.push_str("cartan:\n");
    for row in p["cartan"].as_array().into_iter().flatten() {
        out.push_str(&format!("  {}\n", list(row).join(" ")));
    }
    out.push_str("form:\n");
    for row in p["form"].as_array().into_iter().flatten() {
        out.push_str(&format!("  {}\n", list(row).join(" ")));
    }
    out
}

pub fn datum_csv(p: &Value) -> String {
    let keys = ["type", "rank", "dim", "weyl_order", "positive_roots", "fundamental_group_order"];
    let header: Vec<String> = keys.iter().map(|k| k.to_string()).collect();
    let row: Vec<String> = keys.iter().map(|k| s(&p[*k])).collect();
    csv_rows(&header, &[row])
}

fn corner_rows(p: &Value) -> (Vec<String>, Vec<Vec<String>>) {
    let corners = p["corners"].as_array().cloned().unwrap_or_default();
    let r = corners.first().map_or(0, |c| list(&c["values"]).len());
    let mut header: Vec<String> = ["corner", "kac", "order_bound"].iter().map(|x| x.to_string()).collect();
    header.extend((1..=r).map(|i| format!("f{i}")));
    let rows = corners
        .iter()
        .map(|c| {
            let mut row = vec![s(&c["index"]), list(&c["kac"]).join(" "), s(&c["order_bound"])];
            row.extend(list(&c["values"]));
            row
        })
        .collect();
    (header, rows)
}

pub fn corners_text(p: &Value) -> String {
    let (header, rows) = corner_rows(p);
    let mut out = format!("corners of {}\n{}\n", s(&p["type"]), header.join("\t"));
    for r in rows {
        out.push_str(&r.join("\t"));
        out.push('\n');
    }
    out
}

pub fn corners_csv(p: &Value) -> String {
    let (header, rows) = corner_rows(p);
    csv_rows(&header, &rows)
}

fn matrix_rows(p: &Value) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for (i, row) in p["entries"].as_array().into_iter().flatten().enumerate() {
        for (j, e) in row.as_array().into_iter().flatten().enumerate() {
            rows.push(vec![(i + 1).to_string(), (j + 1).to_string(), s(&e["text"])]);
        }
    }
    rows
}

pub fn matrix_text(p: &Value) -> String {
    let name = if p["sigma"] == Value::Bool(true) { "M^sigma" } else { "M" };
    let mut out = format!("{name} for {}\n", s(&p["type"]));
    for r in matrix_rows(p) {
        out.push_str(&format!("{name}[{}][{}] = {}\n", r[0], r[1], r[2]));
    }
    out
}

pub fn matrix_csv(p: &Value) -> String {
    let header = vec!["i".into(), "j".into(), "entry".into()];
    csv_rows(&header, &matrix_rows(p))
}

fn sense_key(minimize: bool) -> (&'static str, &'static str) {
    if minimize {
        ("minimum", "min")
    } else {
        ("maximum", "max")
    }
}

pub fn extremum_text(p: &Value, minimize: bool) -> String {
    let (key, label) = sense_key(minimize);
    let e = &p[key];
    let w = &e["witness"];
    let place = if w["kind"] == "corner" { "corner" } else { "critical point" };
    let mut out = format!(
        "{label} = {} at {place} ({})\n",
        algebraic_value_text(&e["value"]),
        list(&w["coords"]).join(", ")
    );
    if let Some(d) = e["value"].get("decimal").and_then(Value::as_str) {
        if e["value"].get("rational").is_none() {
            out.push_str(&format!("  ~ {d}\n"));
        }
    }
    let crit = p["critical"].as_array().cloned().unwrap_or_default();
    let included = crit.iter().filter(|c| c["included"] == Value::Bool(true)).count();
    out.push_str(&format!(
        "  {} corners, {} critical points, {} certified off-corner\n",
        p["corners"].as_array().map_or(0, Vec::len),
        crit.len(),
        included
    ));
    out
}

pub fn extremum_csv(p: &Value, minimize: bool) -> String {
    let (key, label) = sense_key(minimize);
    let e = &p[key];
    let header = ["sense", "value", "decimal", "witness", "coords"].map(String::from).to_vec();
    let row = vec![
        label.to_string(),
        algebraic_value_text(&e["value"]),
        s(&e["value"]["decimal"]),
        s(&e["witness"]["kind"]),
        list(&e["witness"]["coords"]).join(" "),
    ];
    csv_rows(&header, &[row])
}

pub fn branch_text(p: &Value) -> String {
    let w: Vec<String> = p["witness"]
        .as_array()
        .into_iter()
        .flatten()
        .map(algebraic_value_text)
        .collect();
    format!(
        "f = {}\nmin = {} at t = ({})\n",
        s(&p["polynomial"]["text"]),
        algebraic_value_text(&p["value"]),
        w.join(", ")
    )
}

pub fn branch_csv(p: &Value) -> String {
    let w: Vec<String> = p["witness"]
        .as_array()
        .into_iter()
        .flatten()
        .map(algebraic_value_text)
        .collect();
    let header = ["min", "decimal", "witness"].map(String::from).to_vec();
    let row = vec![algebraic_value_text(&p["value"]), s(&p["value"]["decimal"]), w.join(" ")];
    csv_rows(&header, &[row])
}

fn table_columns(p: &Value) -> Vec<&'static str> {
    match p["family"].as_str() {
        Some("simple") => vec!["type", "s", "min", "max", "source"],
        Some("reduction") => vec!["type", "s", "subgroup", "correction", "min", "max"],
        _ => vec!["type", "min", "dim"],
    }
}

fn table_rows(p: &Value) -> (Vec<String>, Vec<Vec<String>>) {
    let cols = table_columns(p);
    let rows = p["rows"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|r| cols.iter().map(|c| s(&r[*c])).collect())
        .collect();
    (cols.iter().map(|c| c.to_string()).collect(), rows)
}

pub fn table_text(p: &Value) -> String {
    let (header, rows) = table_rows(p);
    let width: Vec<usize> = (0..header.len())
        .map(|i| rows.iter().map(|r| r[i].len()).chain([header[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |r: &[String]| {
        r.iter()
            .zip(&width)
            .map(|(x, w)| format!("{x:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(&header);
    out.push('\n');
    for r in &rows {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

pub fn table_csv(p: &Value) -> String {
    let (header, rows) = table_rows(p);
    csv_rows(&header, &rows)
}

fn su2_rows(p: &Value) -> Vec<Vec<String>> {
    p["rows"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|r| {
            vec![
                s(&r["d"]),
                algebraic_value_text(&r["min"]),
                s(&r["min"]["decimal"]),
                s(&r["ratio"]),
            ]
        })
        .collect()
}

pub fn su2_text(p: &Value) -> String {
    if p.get("c").is_some() {
        return format!("c = {}\ntheta0 = {}\n", s(&p["c"]), s(&p["theta0"]));
    }
    let mut out = String::from("d\tmin\tdecimal\tmin/(d+1)\n");
    for r in su2_rows(p) {
        out.push_str(&r.join("\t"));
        out.push('\n');
    }
    out
}

pub fn su2_csv(p: &Value) -> String {
    if p.get("c").is_some() {
        let header = ["c", "theta0"].map(String::from).to_vec();
        return csv_rows(&header, &[vec![s(&p["c"]), s(&p["theta0"])]]);
    }
    let header = ["d", "min", "decimal", "ratio"].map(String::from).to_vec();
    csv_rows(&header, &su2_rows(p))
}

pub fn xfun_text(p: &Value) -> String {
    format!(
        "X = {} + {} i  [{}, error estimate {}]\n",
        s(&p["re"]),
        s(&p["im"]),
        s(&p["method"]),
        s(&p["error_estimate"])
    )
}

pub fn xfun_csv(p: &Value) -> String {
    let header = ["re", "im", "method", "error_estimate"].map(String::from).to_vec();
    let row = vec![s(&p["re"]), s(&p["im"]), s(&p["method"]), s(&p["error_estimate"])];
    csv_rows(&header, &[row])
}
