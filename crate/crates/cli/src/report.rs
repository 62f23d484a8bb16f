use std::collections::BTreeMap;
use std::fmt::Display;

/// Flat key/value report, rendered with sorted keys.
#[derive(Debug, Default)]
pub struct Report {
    fields: BTreeMap<String, String>,
    /// Claims that were checked and failed.
    pub failed: Vec<String>,
    /// Some verdict rests on random sampling only.
    pub uncertified: bool,
    /// A search bound was hit before a verdict was reached.
    pub bound_hit: bool,
}

impl Report {
    pub fn set(&mut self, key: impl Into<String>, value: impl Display) {
        self.fields.insert(key.into(), value.to_string());
    }

    pub fn fail(&mut self, claim: impl Into<String>) {
        self.failed.push(claim.into());
    }

    pub fn certify(&mut self, certified: bool) {
        self.uncertified |= !certified;
    }

    pub fn render(&self, json: bool) -> String {
        let mut fields = self.fields.clone();
        if !self.failed.is_empty() {
            fields.insert("failed".into(), self.failed.join("; "));
        }
        if json {
            let mut s = serde_json::to_string_pretty(&fields).expect("string map serializes");
            s.push('\n');
            s
        } else {
            fields.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
        }
    }
}

/// Zero-padded index so that numbered keys sort in order.
pub fn index_key(prefix: &str, k: usize, count: usize, field: &str) -> String {
    let width = count.max(1).to_string().len();
    format!("{prefix}.{:0width$}.{field}", k + 1)
}

pub fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_stable() {
        let mut r = Report::default();
        r.set("zeta", 1);
        r.set("alpha", "x");
        r.set(index_key("entry", 9, 12, "dim"), 3);
        r.set(index_key("entry", 0, 12, "dim"), 1);
        assert_eq!(r.render(false), "alpha=x\nentry.01.dim=1\nentry.10.dim=3\nzeta=1\n");
        let j: BTreeMap<String, String> = serde_json::from_str(&r.render(true)).unwrap();
        assert_eq!(j.len(), 4);
        assert_eq!(j["entry.10.dim"], "3");
    }

    #[test]
    fn failures_are_reported() {
        let mut r = Report::default();
        r.fail("first");
        r.fail("second");
        assert!(r.render(false).contains("failed=first; second\n"));
    }
}
