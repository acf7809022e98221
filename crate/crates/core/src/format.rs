//! Document format for knowledge bases, signatures, hypotheses and queries.
//!
//! ```text
//! doc       := "(dialect" TAG ")" "(tbox" axiom* ")" "(abox" assertion* ")"
//! axiom     := "(sub" concept concept ")" | "(rsub" role role ")"
//! concept   := NAME | "Top" | "Bot" | "(and" concept+ ")" | "(some" role concept? ")" | "(not" concept ")"
//! role      := NAME | "(inv" NAME ")" | "(not" role ")"
//! assertion := "(inst" NAME NAME ")" | "(rel" NAME NAME NAME ")"
//! ```
//!
//! Serialization is canonical: assertions are emitted in sorted order and
//! the whole document is a single line.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{
    check_axiom, is_valid_name, Assertion, AssertionSet, Axiom, Biq, Concept, Dialect,
    KnowledgeBase, RoleExpr, Signature,
};
use crate::sexp::{parse_all, syntax_error, Sexp};

pub fn parse_kb(text: &str) -> Result<KnowledgeBase> {
    let forms = parse_all(text)?;
    let expected = ["dialect", "tbox", "abox"];
    if forms.len() != expected.len() {
        let at = forms.get(expected.len()).or(forms.last());
        return Err(match at {
            Some(f) => syntax_error(f, "expected exactly (dialect ..)(tbox ..)(abox ..)"),
            None => Error::Syntax {
                offset: 0,
                token: String::new(),
                message: "empty document".into(),
            },
        });
    }
    let mut parts = Vec::new();
    for (form, want) in forms.iter().zip(expected) {
        let (head, tail) = form
            .as_form()
            .ok_or_else(|| syntax_error(form, format!("expected ({want} ...)")))?;
        if head != want {
            return Err(keyword_error(form, head, &expected));
        }
        parts.push(tail);
    }

    let dialect = match parts[0] {
        [tag] => {
            let t = tag
                .as_atom()
                .ok_or_else(|| syntax_error(tag, "dialect tag must be an atom"))?;
            Dialect::from_tag(t).ok_or_else(|| Error::UnknownKeyword {
                keyword: t.to_string(),
                offset: tag.offset(),
            })?
        }
        _ => return Err(syntax_error(&forms[0], "expected (dialect TAG)")),
    };

    let mut tbox = Vec::with_capacity(parts[1].len());
    for (i, ax) in parts[1].iter().enumerate() {
        let axiom = parse_axiom(ax)?;
        check_axiom(dialect, &axiom).map_err(|rule| Error::Dialect { axiom: i, rule })?;
        tbox.push(axiom);
    }
    let abox = parts[2]
        .iter()
        .map(parse_assertion)
        .collect::<Result<AssertionSet>>()?;
    Ok(KnowledgeBase {
        dialect,
        tbox,
        abox,
    })
}

pub fn serialize_kb(kb: &KnowledgeBase) -> String {
    let mut out = format!("(dialect {})(tbox", kb.dialect.tag());
    for ax in &kb.tbox {
        out.push(' ');
        out.push_str(&axiom_to_string(ax));
    }
    out.push(')');
    out.push_str(&serialize_abox(&kb.abox));
    out
}

/// Hypothesis documents: `(abox assertion*)`.
pub fn parse_abox(text: &str) -> Result<AssertionSet> {
    let forms = parse_all(text)?;
    match forms.as_slice() {
        [form] => match form.as_form() {
            Some(("abox", tail)) => tail.iter().map(parse_assertion).collect(),
            Some((head, _)) => Err(keyword_error(form, head, &["abox"])),
            None => Err(syntax_error(form, "expected (abox ...)")),
        },
        _ => Err(Error::Syntax {
            offset: 0,
            token: String::new(),
            message: "expected a single (abox ...) form".into(),
        }),
    }
}

pub fn serialize_abox(abox: &AssertionSet) -> String {
    let mut out = String::from("(abox");
    for a in abox {
        out.push(' ');
        out.push_str(&assertion_to_string(a));
    }
    out.push(')');
    out
}

/// `(signature (concepts NAME*) (roles NAME*) (individuals NAME*))`; missing
/// sections are empty.
pub fn parse_signature(text: &str) -> Result<Signature> {
    let forms = parse_all(text)?;
    let form = match forms.as_slice() {
        [f] => f,
        _ => {
            return Err(Error::Syntax {
                offset: 0,
                token: String::new(),
                message: "expected a single (signature ...) form".into(),
            })
        }
    };
    let tail = match form.as_form() {
        Some(("signature", tail)) => tail,
        Some((head, _)) => return Err(keyword_error(form, head, &["signature"])),
        None => return Err(syntax_error(form, "expected (signature ...)")),
    };
    let mut sig = Signature::default();
    for section in tail {
        let (head, names) = section
            .as_form()
            .ok_or_else(|| syntax_error(section, "expected a name section"))?;
        let target = match head {
            "concepts" => &mut sig.concepts,
            "roles" => &mut sig.roles,
            "individuals" => &mut sig.individuals,
            other => {
                return Err(keyword_error(
                    section,
                    other,
                    &["concepts", "roles", "individuals"],
                ))
            }
        };
        for n in names {
            target.insert(name(n)?);
        }
    }
    Ok(sig)
}

pub fn serialize_signature(sig: &Signature) -> String {
    fn section(out: &mut String, head: &str, names: &BTreeSet<String>) {
        out.push_str(" (");
        out.push_str(head);
        for n in names {
            out.push(' ');
            out.push_str(n);
        }
        out.push(')');
    }
    let mut out = String::from("(signature");
    section(&mut out, "concepts", &sig.concepts);
    section(&mut out, "roles", &sig.roles);
    section(&mut out, "individuals", &sig.individuals);
    out.push(')');
    out
}

/// `(biq concept NAME)`.
pub fn parse_biq(text: &str) -> Result<Biq> {
    let forms = parse_all(text)?;
    let form = match forms.as_slice() {
        [f] => f,
        _ => {
            return Err(Error::Syntax {
                offset: 0,
                token: String::new(),
                message: "expected a single (biq ...) form".into(),
            })
        }
    };
    match form.as_form() {
        Some(("biq", [c, ind])) => Ok(Biq {
            concept: parse_concept(c)?,
            individual: name(ind)?,
        }),
        Some(("biq", _)) => Err(syntax_error(form, "expected (biq CONCEPT INDIVIDUAL)")),
        Some((head, _)) => Err(keyword_error(form, head, &["biq"])),
        None => Err(syntax_error(form, "expected (biq ...)")),
    }
}

pub fn biq_to_string(q: &Biq) -> String {
    format!("(biq {} {})", concept_to_string(&q.concept), q.individual)
}

pub fn concept_to_string(c: &Concept) -> String {
    match c {
        Concept::Top => "Top".into(),
        Concept::Bot => "Bot".into(),
        Concept::Name(n) => n.clone(),
        Concept::And(parts) => {
            let inner: Vec<String> = parts.iter().map(concept_to_string).collect();
            format!("(and {})", inner.join(" "))
        }
        Concept::Exists(r, filler) if **filler == Concept::Top => {
            format!("(some {})", role_to_string(r))
        }
        Concept::Exists(r, filler) => {
            format!("(some {} {})", role_to_string(r), concept_to_string(filler))
        }
        Concept::Not(inner) => format!("(not {})", concept_to_string(inner)),
    }
}

pub fn role_to_string(r: &RoleExpr) -> String {
    let base = if r.inverse {
        format!("(inv {})", r.name)
    } else {
        r.name.clone()
    };
    if r.negated {
        format!("(not {base})")
    } else {
        base
    }
}

pub fn axiom_to_string(ax: &Axiom) -> String {
    match ax {
        Axiom::ConceptInclusion(l, r) => {
            format!("(sub {} {})", concept_to_string(l), concept_to_string(r))
        }
        Axiom::RoleInclusion(l, r) => format!("(rsub {} {})", role_to_string(l), role_to_string(r)),
    }
}

pub fn assertion_to_string(a: &Assertion) -> String {
    match a {
        Assertion::Concept {
            concept,
            individual,
        } => format!("(inst {concept} {individual})"),
        Assertion::Role {
            role,
            subject,
            object,
        } => format!("(rel {role} {subject} {object})"),
    }
}

fn keyword_error(at: &Sexp, head: &str, expected: &[&str]) -> Error {
    if expected.contains(&head) {
        syntax_error(at, format!("`{head}` is out of place"))
    } else {
        Error::UnknownKeyword {
            keyword: head.to_string(),
            offset: at.offset(),
        }
    }
}

fn name(s: &Sexp) -> Result<String> {
    let text = s
        .as_atom()
        .ok_or_else(|| syntax_error(s, "expected a name"))?;
    if !is_valid_name(text) {
        return Err(Error::InvalidName(text.to_string()));
    }
    Ok(text.to_string())
}

fn concept_name(s: &Sexp) -> Result<String> {
    let n = name(s)?;
    if n == "Top" || n == "Bot" {
        return Err(syntax_error(s, "Top/Bot cannot be asserted"));
    }
    Ok(n)
}

pub(crate) fn parse_concept(s: &Sexp) -> Result<Concept> {
    if let Some(atom) = s.as_atom() {
        return Ok(match atom {
            "Top" => Concept::Top,
            "Bot" => Concept::Bot,
            _ => Concept::Name(name(s)?),
        });
    }
    let (head, tail) = s
        .as_form()
        .ok_or_else(|| syntax_error(s, "expected a concept"))?;
    match (head, tail) {
        ("and", parts) if !parts.is_empty() => Ok(Concept::And(
            parts.iter().map(parse_concept).collect::<Result<_>>()?,
        )),
        ("and", _) => Err(syntax_error(s, "empty conjunction")),
        ("some", [role]) => Ok(Concept::exists(parse_role(role)?)),
        ("some", [role, filler]) => Ok(Concept::some(parse_role(role)?, parse_concept(filler)?)),
        ("some", _) => Err(syntax_error(s, "expected (some ROLE [CONCEPT])")),
        ("not", [inner]) => Ok(Concept::not(parse_concept(inner)?)),
        ("not", _) => Err(syntax_error(s, "expected (not CONCEPT)")),
        (other, _) => Err(keyword_error(s, other, &[])),
    }
}

fn parse_role(s: &Sexp) -> Result<RoleExpr> {
    if s.as_atom().is_some() {
        return Ok(RoleExpr::named(name(s)?));
    }
    let (head, tail) = s
        .as_form()
        .ok_or_else(|| syntax_error(s, "expected a role"))?;
    match (head, tail) {
        ("inv", [n]) => Ok(RoleExpr::inverse_of(name(n)?)),
        ("inv", _) => Err(syntax_error(s, "expected (inv NAME)")),
        ("not", [inner]) => {
            let r = parse_role(inner)?;
            if r.negated {
                return Err(syntax_error(s, "double role negation"));
            }
            Ok(r.negate())
        }
        ("not", _) => Err(syntax_error(s, "expected (not ROLE)")),
        (other, _) => Err(keyword_error(s, other, &[])),
    }
}

fn parse_axiom(s: &Sexp) -> Result<Axiom> {
    let (head, tail) = s
        .as_form()
        .ok_or_else(|| syntax_error(s, "expected an axiom"))?;
    match (head, tail) {
        ("sub", [l, r]) => Ok(Axiom::ConceptInclusion(
            parse_concept(l)?,
            parse_concept(r)?,
        )),
        ("rsub", [l, r]) => Ok(Axiom::RoleInclusion(parse_role(l)?, parse_role(r)?)),
        ("sub", _) | ("rsub", _) => Err(syntax_error(
            s,
            format!("`{head}` takes exactly two arguments"),
        )),
        (other, _) => Err(keyword_error(s, other, &[])),
    }
}

fn parse_assertion(s: &Sexp) -> Result<Assertion> {
    let (head, tail) = s
        .as_form()
        .ok_or_else(|| syntax_error(s, "expected an assertion"))?;
    match (head, tail) {
        ("inst", [c, a]) => {
            if c.as_atom().is_none() {
                return Err(syntax_error(c, "assertions are flat: concept names only"));
            }
            Ok(Assertion::concept(concept_name(c)?, name(a)?))
        }
        ("rel", [r, a, b]) => Ok(Assertion::role(name(r)?, name(a)?, name(b)?)),
        ("inst", _) | ("rel", _) => Err(syntax_error(
            s,
            format!("wrong number of arguments to `{head}`"),
        )),
        (other, _) => Err(keyword_error(s, other, &[])),
    }
}
