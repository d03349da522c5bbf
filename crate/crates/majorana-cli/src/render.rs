//! Table computation and output rendering (text, JSON, CSV).

use serde_json::{json, Value};

use majorana::bispinor::{canonical_weyl, measure_weyl_canonical};
use majorana::matrix::Vector4;
use majorana::qubit::{gate_action_table, GateActionCell, GateLabel};
use majorana::scalar::Complex64;
use majorana::ExactScalar;

/// The three computed tables: canonical eigenvalues and the two gate-action
/// tables. Everything is measured/decomposed from the matrices, not typed in.
pub struct Tables {
    /// (solution index, energy, helicity, chirality)
    pub eigenvalues: Vec<(usize, i8, i8, i8)>,
    pub rotation_cells: Vec<GateActionCell>,
    pub majorana_cells: Vec<GateActionCell>,
}

impl Tables {
    pub fn compute() -> Self {
        let eigenvalues = (1..=4)
            .map(|i| {
                let u = canonical_weyl(i);
                let (e, h, c) =
                    measure_weyl_canonical(&u.components).expect("canonical eigenvectors");
                (i, e, h, c)
            })
            .collect();
        Tables {
            eigenvalues,
            rotation_cells: gate_action_table(&GateLabel::R_FAMILY),
            majorana_cells: gate_action_table(&GateLabel::RHAT_FAMILY),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("Eigenvalues of the canonical-frame solutions\n");
        out.push_str(&format!(
            "{:<11}{:>7}{:>7}{:>7}{:>7}\n",
            "", "u(1)", "u(2)", "u(3)", "u(4)"
        ));
        let sign = |v: i8| if v > 0 { "+" } else { "-" }.to_string();
        let signed = |v: i8| format!("{v:+}");
        out.push_str(&format!(
            "{:<11}{:>7}{:>7}{:>7}{:>7}\n",
            "energy",
            sign(self.eigenvalues[0].1),
            sign(self.eigenvalues[1].1),
            sign(self.eigenvalues[2].1),
            sign(self.eigenvalues[3].1)
        ));
        out.push_str(&format!(
            "{:<11}{:>7}{:>7}{:>7}{:>7}\n",
            "helicity",
            signed(self.eigenvalues[0].2),
            signed(self.eigenvalues[1].2),
            signed(self.eigenvalues[2].2),
            signed(self.eigenvalues[3].2)
        ));
        out.push_str(&format!(
            "{:<11}{:>7}{:>7}{:>7}{:>7}\n",
            "chirality",
            signed(self.eigenvalues[0].3),
            signed(self.eigenvalues[1].3),
            signed(self.eigenvalues[2].3),
            signed(self.eigenvalues[3].3)
        ));

        for (title, cells) in [
            ("rotation gates", &self.rotation_cells),
            ("Hermitian (Majorana-operator) gates", &self.majorana_cells),
        ] {
            out.push_str(&format!(
                "\nAction of the {title} on the computational basis\n"
            ));
            out.push_str(&format!(
                "{:<8}{:>12}{:>12}{:>12}{:>12}\n",
                "", "|10⟩", "|01⟩", "|11⟩", "|00⟩"
            ));
            for row in cells.chunks(4) {
                let cell = |c: &GateActionCell| format!("{}|{}⟩", c.phase.prefix(), c.bell);
                out.push_str(&format!(
                    "{:<8}{:>12}{:>12}{:>12}{:>12}\n",
                    row[0].gate.ascii(),
                    cell(&row[0]),
                    cell(&row[1]),
                    cell(&row[2]),
                    cell(&row[3])
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let cells_json = |cells: &[GateActionCell]| {
            cells
                .iter()
                .map(|c| {
                    json!({
                        "gate": c.gate.ascii(),
                        "input": format!("{}{}", c.input / 2, c.input % 2),
                        "phase": c.phase.to_string(),
                        "bell": c.bell.ascii(),
                    })
                })
                .collect::<Vec<_>>()
        };
        json!({
            "eigenvalues": self
                .eigenvalues
                .iter()
                .map(|(i, e, h, c)| json!({
                    "solution": i,
                    "energy": e,
                    "helicity": h,
                    "chirality": c,
                }))
                .collect::<Vec<_>>(),
            "rotation_gates": cells_json(&self.rotation_cells),
            "majorana_gates": cells_json(&self.majorana_cells),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("table,row,column,value\n");
        for (i, e, h, c) in &self.eigenvalues {
            out.push_str(&format!("eigenvalues,u{i},energy,{e:+}\n"));
            out.push_str(&format!("eigenvalues,u{i},helicity,{h:+}\n"));
            out.push_str(&format!("eigenvalues,u{i},chirality,{c:+}\n"));
        }
        for (name, cells) in [
            ("rotation_gates", &self.rotation_cells),
            ("majorana_gates", &self.majorana_cells),
        ] {
            for c in cells.iter() {
                out.push_str(&format!(
                    "{name},{},{}{},{}{}\n",
                    c.gate.ascii(),
                    c.input / 2,
                    c.input % 2,
                    c.phase.prefix(),
                    c.bell.ascii()
                ));
            }
        }
        out
    }
}

/// Exact scalar as JSON: the coefficient 4-tuple plus its float rendering.
pub fn exact_json(x: &ExactScalar) -> Value {
    let c = x.to_complex();
    json!({
        "exact": x,
        "re": c.re,
        "im": c.im,
    })
}

/// Float vector as an array of re/im pairs.
pub fn complex_vector_json(v: &Vector4<Complex64>) -> Value {
    Value::Array(
        v.components()
            .iter()
            .map(|c| json!({"re": c.re, "im": c.im}))
            .collect(),
    )
}
