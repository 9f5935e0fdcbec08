//! Conversion between the Serbian Latin special letters and two-letter ASCII codes.
//!
//! Rules and lexicon entries are written over plain `a-z`, so `č ć ž š đ`
//! are rewritten as `cx cy zx sx dx` before matching and restored afterwards.
//! Uppercase special letters encode to the same lowercase code.

/// Ordered `(letter, code)` pairs. Lowercase letters first, then uppercase.
pub const DIGRAPHS: [(char, &str); 10] = [
    ('č', "cx"),
    ('ć', "cy"),
    ('ž', "zx"),
    ('š', "sx"),
    ('đ', "dx"),
    ('Č', "cx"),
    ('Ć', "cy"),
    ('Ž', "zx"),
    ('Š', "sx"),
    ('Đ', "dx"),
];

/// The five distinct codes, in the order they are tried by [`decode`].
pub const CODES: [&str; 5] = ["cx", "cy", "zx", "sx", "dx"];

fn code_for(c: char) -> Option<&'static str> {
    DIGRAPHS
        .iter()
        .find_map(|&(letter, code)| (letter == c).then_some(code))
}

fn letter_for(first: u8, second: u8) -> Option<char> {
    match (first, second) {
        (b'c', b'x') => Some('č'),
        (b'c', b'y') => Some('ć'),
        (b'z', b'x') => Some('ž'),
        (b's', b'x') => Some('š'),
        (b'd', b'x') => Some('đ'),
        _ => None,
    }
}

/// Replaces every special letter with its code. Other characters, including
/// their case, are left alone.
pub fn encode(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + text.len() / 4);
    for c in text.chars() {
        match code_for(c) {
            Some(code) => out.push_str(code),
            None => out.push(c),
        }
    }
    out
}

/// Replaces every code with its lowercase special letter in a single
/// left-to-right, non-overlapping pass.
///
/// Text that natively contains a code sequence (foreign words such as
/// "szx") decodes into a special letter as well.
pub fn decode(coded: &str) -> String {
    let bytes = coded.as_bytes();
    let mut out = String::with_capacity(coded.len());
    let mut start = 0;
    let mut i = 0;
    while i + 1 < bytes.len() {
        if let Some(letter) = letter_for(bytes[i], bytes[i + 1]) {
            out.push_str(&coded[start..i]);
            out.push(letter);
            i += 2;
            start = i;
        } else {
            i += 1;
        }
    }
    out.push_str(&coded[start..]);
    out
}

/// Returns true when `text` starts with one of the five codes.
pub fn starts_with_code(text: &str) -> bool {
    CODES.iter().any(|code| text.starts_with(code))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_examples() {
        assert_eq!(encode("čokolada"), "cxokolada");
        assert_eq!(encode("Đak"), "dxak");
        assert_eq!(encode(""), "");
        assert_eq!(encode("abc"), "abc");
        assert_eq!(encode("ŠĆĐŽČ"), "sxcydxzxcx");
        assert_eq!(encode("Beograd"), "Beograd");
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode("cxas"), "čas");
        assert_eq!(decode(""), "");
        assert_eq!(decode("x"), "x");
        assert_eq!(decode("cxcyzxsxdx"), "čćžšđ");
        // Non-overlapping: "ccx" is "c" + "cx".
        assert_eq!(decode("ccx"), "cč");
        assert_eq!(decode("zdx"), "zđ");
    }

    #[test]
    fn decode_leaves_non_ascii_intact() {
        assert_eq!(decode("БЕcxОГРАД"), "БЕčОГРАД");
        assert_eq!(decode("ćx"), "ćx");
    }

    #[test]
    fn round_trip() {
        for word in ["čitati", "đak", "ćevapčići", "šuma", "žena", "knjiga"] {
            assert_eq!(decode(&encode(word)), word);
        }
    }

    #[test]
    fn codes_are_prefix_free() {
        for a in CODES {
            assert_eq!(a.len(), 2);
            assert!("czsd".contains(&a[..1]));
            assert!("xy".contains(&a[1..]));
            for b in CODES {
                if a != b {
                    assert!(!b.starts_with(a));
                }
            }
        }
    }

    #[test]
    fn leading_code_detection() {
        assert!(starts_with_code("zxene"));
        assert!(starts_with_code("dxak"));
        assert!(!starts_with_code("ona"));
        assert!(!starts_with_code("c"));
        assert!(!starts_with_code(""));
    }
}
