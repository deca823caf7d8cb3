//! Output assembly: JSON payloads, capacity tables and the tropical
//! min-plus pretty form. Rationals are always serialized as `p/q`
//! strings in machine formats.

use capcalc::capacity::CapacityResult;
use capcalc::toric::CapacityRow;
use capcalc::tropical::TropicalCapacity;

use crate::Format;

pub fn fk_json(r: &CapacityResult) -> serde_json::Value {
    serde_json::json!({
        "k": r.k,
        "value": r.value.to_string(),
        "witnesses": r.witnesses.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "reduced_omega": r.omega_reduced.to_string(),
    })
}

pub fn tropical_json(tp: &TropicalCapacity) -> serde_json::Value {
    serde_json::json!({
        "n": tp.n(),
        "k": tp.k(),
        "certified": tp.certified(),
        "terms": tp.terms().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

fn superscript(v: i64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut out = String::new();
    if v < 0 {
        out.push('⁻');
    }
    for c in v.abs().to_string().chars() {
        out.push(DIGITS[c.to_digit(10).unwrap() as usize]);
    }
    out
}

/// Min-plus notation, e.g. `(5⊙x⁻⁵)⊕(3⊙x⁻²)⊕2` for one blowup.
pub fn tropical_pretty(tp: &TropicalCapacity) -> String {
    let var = |i: usize| {
        if tp.n() == 1 {
            "x".to_string()
        } else {
            format!("x{}", i + 1)
        }
    };
    let terms: Vec<String> = tp
        .terms()
        .iter()
        .map(|t| {
            let mut factors = vec![t.a().to_string()];
            for (i, &b) in t.b().iter().enumerate() {
                if b != 0 {
                    factors.push(format!("{}{}", var(i), superscript(-b)));
                }
            }
            if factors.len() == 1 {
                factors.pop().unwrap()
            } else {
                format!("({})", factors.join("⊙"))
            }
        })
        .collect();
    terms.join("⊕")
}

pub fn print_capacity_rows(rows: &[CapacityRow], format: Format) {
    match format {
        Format::Json => {
            let arr: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    let mut obj = serde_json::json!({
                        "k": r.k,
                        "ech": r.ech.to_string(),
                    });
                    if let Some(fk) = &r.fk {
                        obj["fk"] = serde_json::Value::String(fk.to_string());
                        obj["equal"] = serde_json::Value::Bool(r.equal == Some(true));
                    }
                    obj
                })
                .collect();
            println!("{}", serde_json::Value::Array(arr));
        }
        Format::Csv => {
            let crosschecked = rows.iter().any(|r| r.fk.is_some());
            if crosschecked {
                println!("k,ech,fk,equal");
                for r in rows {
                    println!(
                        "{},{},{},{}",
                        r.k,
                        r.ech,
                        r.fk.as_ref().map_or_else(String::new, |v| v.to_string()),
                        r.equal.map_or_else(String::new, |b| b.to_string())
                    );
                }
            } else {
                println!("k,ech");
                for r in rows {
                    println!("{},{}", r.k, r.ech);
                }
            }
        }
        Format::Pretty => {
            for r in rows {
                match (&r.fk, r.equal) {
                    (Some(fk), eq) => println!(
                        "k = {:2}: ech = {}, fk = {}{}",
                        r.k,
                        r.ech,
                        fk,
                        if eq == Some(true) { "  [equal]" } else { "  [MISMATCH]" }
                    ),
                    (None, _) => println!("k = {:2}: ech = {}", r.k, r.ech),
                }
            }
        }
    }
}
