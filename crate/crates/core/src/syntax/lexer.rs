//! Tokenizer for MiniGen. Statement bodies pass through as ordinary tokens;
//! the parser reconstructs their text from source spans, so the lexer only
//! needs to classify identifiers, numbers, and single punctuation characters.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokKind {
    Ident,
    Number,
    Sym(char),
}

#[derive(Debug, Clone)]
pub struct Token {
    pub kind: TokKind,
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub col: usize,
}

#[derive(Debug)]
pub struct LexOutput {
    pub tokens: Vec<Token>,
    /// Byte ranges of skipped comments, used to splice them out of
    /// statement text.
    pub comments: Vec<(usize, usize)>,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_' || c == '$'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '$'
}

/// Tokenize the whole input. Never fails: unknown characters become `Sym`
/// tokens (statement bodies may contain arbitrary Java-ish punctuation).
pub fn lex(src: &str) -> LexOutput {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut comments = Vec::new();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;

    let mut bump = |i: &mut usize, line: &mut usize, col: &mut usize| {
        if bytes[*i] == b'\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
        *i += 1;
    };

    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            bump(&mut i, &mut line, &mut col);
            continue;
        }
        if c == '/' && i + 1 < bytes.len() && bytes[i + 1] == b'/' {
            let start = i;
            while i < bytes.len() && bytes[i] != b'\n' {
                bump(&mut i, &mut line, &mut col);
            }
            comments.push((start, i));
            continue;
        }
        if c == '/' && i + 1 < bytes.len() && bytes[i + 1] == b'*' {
            let start = i;
            bump(&mut i, &mut line, &mut col);
            bump(&mut i, &mut line, &mut col);
            while i + 1 < bytes.len() && !(bytes[i] == b'*' && bytes[i + 1] == b'/') {
                bump(&mut i, &mut line, &mut col);
            }
            if i + 1 < bytes.len() {
                bump(&mut i, &mut line, &mut col);
                bump(&mut i, &mut line, &mut col);
            } else {
                i = bytes.len();
            }
            comments.push((start, i));
            continue;
        }
        let (tline, tcol, start) = (line, col, i);
        if is_ident_start(c) {
            while i < bytes.len() && is_ident_continue(bytes[i] as char) {
                bump(&mut i, &mut line, &mut col);
            }
            tokens.push(Token { kind: TokKind::Ident, start, end: i, line: tline, col: tcol });
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                bump(&mut i, &mut line, &mut col);
            }
            tokens.push(Token { kind: TokKind::Number, start, end: i, line: tline, col: tcol });
        } else {
            bump(&mut i, &mut line, &mut col);
            tokens.push(Token { kind: TokKind::Sym(c), start, end: i, line: tline, col: tcol });
        }
    }

    LexOutput { tokens, comments }
}

impl LexOutput {
    /// Slice `src[a..b]` with any comment ranges spliced out.
    pub fn text_without_comments(&self, src: &str, a: usize, b: usize) -> String {
        let mut out = String::new();
        let mut cur = a;
        for &(cs, ce) in &self.comments {
            if ce <= a || cs >= b {
                continue;
            }
            let cs = cs.max(a);
            let ce = ce.min(b);
            out.push_str(&src[cur..cs]);
            cur = ce;
        }
        out.push_str(&src[cur..b]);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idents_numbers_and_syms() {
        let out = lex("class C<T> { int i = 0; }");
        let kinds: Vec<_> = out.tokens.iter().map(|t| t.kind).collect();
        assert_eq!(kinds[0], TokKind::Ident);
        assert!(kinds.contains(&TokKind::Sym('<')));
        assert!(kinds.contains(&TokKind::Number));
        assert!(out.comments.is_empty());
    }

    #[test]
    fn comments_are_skipped_and_recorded() {
        let src = "a /* mid */ b // tail\nc";
        let out = lex(src);
        assert_eq!(out.tokens.len(), 3);
        assert_eq!(out.comments.len(), 2);
        assert_eq!(out.text_without_comments(src, 0, src.len()), "a  b \nc");
    }

    #[test]
    fn line_and_column_tracking() {
        let out = lex("ab\n  cd");
        assert_eq!((out.tokens[0].line, out.tokens[0].col), (1, 1));
        assert_eq!((out.tokens[1].line, out.tokens[1].col), (2, 3));
    }
}
