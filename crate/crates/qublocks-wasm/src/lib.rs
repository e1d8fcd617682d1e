//! Browser bindings for the qublocks library: enumerate characters,
//! enumerate blocks and map characters across the correspondence, all
//! returning JSON strings for the demo page to render.
//!
//! The logic lives in plain functions returning `Result<String, String>`
//! so it can be unit-tested on the host; the `wasm_bindgen` wrappers only
//! add the JavaScript surface.

use wasm_bindgen::prelude::*;

/// JSON array of the quadratic unipotent characters of the family at the
/// given rank (n for gl/u, m for sp).
#[wasm_bindgen]
pub fn characters(family: &str, n: u32) -> Result<String, JsValue> {
    api::characters(family, n).map_err(|e| JsValue::from_str(&e))
}

/// JSON array of the block records of the family at the given rank in the
/// regime (f, eps), optionally with an arithmetic witness (q, l).
#[wasm_bindgen]
pub fn blocks(
    family: &str,
    n: u32,
    f: u32,
    eps: i8,
    q: Option<u32>,
    ell: Option<u32>,
) -> Result<String, JsValue> {
    api::blocks(family, n, f, eps, q, ell).map_err(|e| JsValue::from_str(&e))
}

/// Map a character given in pair coordinates across the correspondence:
/// a bipartition `[[..],[..]]` for gl/u, a pair of symbols for sp. Returns
/// JSON with the source, the image and the two rank equations.
#[wasm_bindgen]
pub fn map_character(family: &str, pair_json: &str) -> Result<String, JsValue> {
    api::map_character(family, pair_json).map_err(|e| JsValue::from_str(&e))
}

pub mod api {
    use qublocks::blocks::{enumerate_blocks, BlockLabel, BlockReport, Family, Regime};
    use qublocks::characters::{
        correspond_char, correspond_char_inv, enumerate_gl, enumerate_sp, GlFamily, QuCharGl,
        QuCharSp,
    };
    use qublocks::partitions::Bipartition;
    use qublocks::symbols::Symbol;

    fn err(e: impl ToString) -> String {
        e.to_string()
    }

    pub fn characters(family: &str, n: u32) -> Result<String, String> {
        let json = match Family::parse(family).map_err(err)? {
            Family::Gl => serde_json::to_string(&enumerate_gl(GlFamily::Gl, n)),
            Family::U => serde_json::to_string(&enumerate_gl(GlFamily::U, n)),
            Family::Sp => serde_json::to_string(&enumerate_sp(n)),
        };
        json.map_err(err)
    }

    pub fn blocks(
        family: &str,
        n: u32,
        f: u32,
        eps: i8,
        q: Option<u32>,
        ell: Option<u32>,
    ) -> Result<String, String> {
        let family = Family::parse(family).map_err(err)?;
        let regime = match (q, ell) {
            (Some(q), Some(ell)) => Regime::with_witness(family, f, eps, q as u64, ell as u64),
            (None, None) => Regime::new(family, f, eps),
            _ => return Err("q and l must be supplied together".into()),
        }
        .map_err(err)?;
        let reports: Vec<BlockReport> = enumerate_blocks(&regime, n)
            .map_err(err)?
            .iter()
            .map(BlockLabel::report)
            .collect();
        serde_json::to_string(&reports).map_err(err)
    }

    fn char_map_json(chi: &QuCharGl, psi: &QuCharSp, sp_is_source: bool) -> Result<String, String> {
        let t = chi.tuple();
        let u = psi.tuple();
        let type_a = format!(
            "{}({}+1)/2 + {}({}+1)/2 + 2*{} + 2*{} = {}",
            t.m1,
            t.m1,
            t.m2,
            t.m2,
            t.rho1.size(),
            t.rho2.size(),
            chi.n()
        );
        let type_c = format!(
            "{}({}+1) + ({})^2 + {} + {} = {}",
            u.h1,
            u.h1,
            u.h2,
            u.rho1.size(),
            u.rho2.size(),
            psi.rank()
        );
        let (source, image) = if sp_is_source {
            (serde_json::to_value(psi), serde_json::to_value(chi))
        } else {
            (serde_json::to_value(chi), serde_json::to_value(psi))
        };
        serde_json::to_string(&serde_json::json!({
            "source": source.map_err(err)?,
            "image": image.map_err(err)?,
            "rank_equations": { "type_a": type_a, "type_c": type_c },
        }))
        .map_err(err)
    }

    pub fn map_character(family: &str, pair_json: &str) -> Result<String, String> {
        match Family::parse(family).map_err(err)? {
            Family::Gl | Family::U => {
                let pair: Bipartition = serde_json::from_str(pair_json).map_err(err)?;
                let chi = QuCharGl::from_pair(GlFamily::Gl, pair);
                let psi = correspond_char(&chi);
                char_map_json(&chi, &psi, false)
            }
            Family::Sp => {
                let (s1, s2): (Symbol, Symbol) = serde_json::from_str(pair_json).map_err(err)?;
                let psi = QuCharSp::from_pair(s1, s2).map_err(err)?;
                let chi = correspond_char_inv(&psi, GlFamily::Gl);
                char_map_json(&chi, &psi, true)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::api;

    #[test]
    fn characters_json() {
        let text = api::characters("sp", 2).unwrap();
        let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
        assert_eq!(rows.len(), 23);
        assert!(api::characters("so", 2).is_err());
    }

    #[test]
    fn blocks_json() {
        let text = api::blocks("gl", 4, 1, -1, None, None).unwrap();
        let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
        assert_eq!(rows.len(), 7);
        assert!(api::blocks("u", 4, 2, 1, None, None).is_err());
        let text = api::blocks("sp", 2, 1, 1, Some(7), Some(3)).unwrap();
        let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
        assert!(rows.iter().all(|r| r["defect_exponent"].is_number()));
    }

    #[test]
    fn map_character_json() {
        let text = api::map_character("gl", "[[1],[1]]").unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["image"]["n"], 2);
        assert_eq!(v["image"]["tuple"]["h1"], 1);
        assert!(api::map_character("gl", "[[1]").is_err());
    }
}
