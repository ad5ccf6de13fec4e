use crate::context::Context;
use crate::convio;
use crate::error::{MpError, Result};
use crate::repr::MpFloat;
use crate::{arith, elem, special};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Power,
    Open,
    Close,
    Comma,
}

fn syntax(msg: impl Into<String>) -> MpError {
    MpError::Parse(msg.into())
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' if chars.get(i + 1) == Some(&'*') => {
                out.push(Token::Power);
                i += 2;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Power);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '(' => {
                out.push(Token::Open);
                i += 1;
            }
            ')' => {
                out.push(Token::Close);
                i += 1;
            }
            ',' => {
                out.push(Token::Comma);
                i += 1;
            }
            c if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                if i < chars.len() && matches!(chars[i], 'e' | 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && matches!(chars[j], '+' | '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].is_ascii_digit() {
                        while j < chars.len() && chars[j].is_ascii_digit() {
                            j += 1;
                        }
                        i = j;
                    }
                }
                out.push(Token::Number(chars[start..i].iter().collect()));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Name(chars[start..i].iter().collect()));
            }
            c => return Err(syntax(format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

/// Names of the functions [`evaluate`] understands, with their argument counts.
pub const FUNCTIONS: &[(&str, usize)] = &[
    ("abs", 1),
    ("asin", 1),
    ("atan", 1),
    ("atan1", 1),
    ("atan2", 2),
    ("besselj", 2),
    ("bernoulli", 1),
    ("ceil", 1),
    ("cos", 1),
    ("cosh", 1),
    ("dawson", 1),
    ("ei", 1),
    ("erf", 1),
    ("erfc", 1),
    ("exp", 1),
    ("expm1", 1),
    ("floor", 1),
    ("frac", 1),
    ("gamma", 1),
    ("int", 1),
    ("li", 1),
    ("ln", 1),
    ("ln1p", 1),
    ("lnagm", 1),
    ("lngamma", 1),
    ("log10", 1),
    ("max", 2),
    ("min", 2),
    ("mod", 2),
    ("pow", 2),
    ("root", 2),
    ("sin", 1),
    ("sinh", 1),
    ("sqrt", 1),
    ("tan", 1),
    ("tanh", 1),
    ("zeta", 1),
];

/// Named constants: `pi`, `euler`, `eps`, `maxr`, `minr`.
pub const CONSTANTS: &[&str] = &["pi", "euler", "eps", "maxr", "minr"];

struct Parser<'a> {
    ctx: &'a Context,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(syntax(format!("expected {t:?}")))
        }
    }

    fn expr(&mut self) -> Result<MpFloat> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                acc = arith::add(self.ctx, &acc, &self.term()?)?;
            } else if self.eat(&Token::Minus) {
                acc = arith::sub(self.ctx, &acc, &self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MpFloat> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Token::Star) {
                acc = arith::mul(self.ctx, &acc, &self.unary()?)?;
            } else if self.eat(&Token::Slash) {
                acc = arith::div(self.ctx, &acc, &self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MpFloat> {
        if self.eat(&Token::Minus) {
            return Ok(self.unary()?.neg());
        }
        if self.eat(&Token::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MpFloat> {
        let base = self.primary()?;
        if !self.eat(&Token::Power) {
            return Ok(base);
        }
        let e = self.unary()?;
        power(self.ctx, &base, &e)
    }

    fn primary(&mut self) -> Result<MpFloat> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Number(s)) => {
                self.pos += 1;
                convio::parse(&self.ctx.with_io_bases(10, self.ctx.out_base())?, &s)
            }
            Some(Token::Open) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(Token::Close)?;
                Ok(v)
            }
            Some(Token::Name(name)) => {
                self.pos += 1;
                if self.eat(&Token::Open) {
                    let mut args = vec![self.expr()?];
                    while self.eat(&Token::Comma) {
                        args.push(self.expr()?);
                    }
                    self.expect(Token::Close)?;
                    call(self.ctx, &name, &args)
                } else {
                    constant(self.ctx, &name)
                }
            }
            Some(t) => Err(syntax(format!("unexpected {t:?}"))),
            None => Err(syntax("unexpected end of expression")),
        }
    }
}

fn power(ctx: &Context, x: &MpFloat, e: &MpFloat) -> Result<MpFloat> {
    if arith::is_integer(e) {
        if let Ok(n) = arith::to_small_int(ctx, e) {
            return elem::pow_int(ctx, x, n);
        }
    }
    elem::pow(ctx, x, e)
}

fn constant(ctx: &Context, name: &str) -> Result<MpFloat> {
    match name {
        "pi" => special::pi(ctx),
        "euler" => special::euler_gamma(ctx),
        "eps" => Ok(ctx.epsilon()),
        "maxr" => Ok(ctx.max_real()),
        "minr" => Ok(ctx.min_real()),
        _ => Err(syntax(format!("unknown name {name:?}"))),
    }
}

fn small_int(ctx: &Context, x: &MpFloat) -> Result<i64> {
    if !arith::is_integer(x) {
        return Err(MpError::NotAnInteger);
    }
    arith::to_small_int(ctx, x)
}

fn call(ctx: &Context, name: &str, args: &[MpFloat]) -> Result<MpFloat> {
    let arity = FUNCTIONS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, a)| a)
        .ok_or_else(|| syntax(format!("unknown function {name:?}")))?;
    if args.len() != arity {
        return Err(syntax(format!("{name} takes {arity} argument(s), got {}", args.len())));
    }
    let x = &args[0];
    match name {
        "abs" => Ok(x.abs()),
        "asin" => elem::asin(ctx, x),
        "atan" => elem::atan(ctx, x),
        "atan1" => elem::atan_recip_int(ctx, small_int(ctx, x)?),
        "atan2" => elem::atan2(ctx, x, &args[1]),
        "besselj" => special::bessel_j(ctx, small_int(ctx, x)?, &args[1]),
        "bernoulli" => {
            let n = small_int(ctx, x)?;
            if n < 1 {
                return Err(MpError::Domain("bernoulli needs n >= 1".into()));
            }
            special::bernoulli(ctx, n)?.get(ctx, n as usize)
        }
        "ceil" => arith::ceil(ctx, x),
        "cos" => elem::cos(ctx, x),
        "cosh" => elem::cosh(ctx, x),
        "dawson" => special::dawson(ctx, x),
        "ei" => special::ei(ctx, x),
        "erf" => special::erf(ctx, x),
        "erfc" => special::erfc(ctx, x),
        "exp" => elem::exp(ctx, x),
        "expm1" => elem::expm1(ctx, x),
        "floor" => arith::floor(ctx, x),
        "frac" => arith::frac(ctx, x),
        "gamma" => special::gamma(ctx, x),
        "int" => arith::int_trunc(ctx, x),
        "li" => special::li(ctx, x),
        "ln" => elem::ln(ctx, x),
        "ln1p" => elem::ln1p_small(ctx, x),
        "lnagm" => elem::ln_agm(ctx, x),
        "lngamma" => special::ln_gamma(ctx, x),
        "log10" => elem::log10(ctx, x),
        "max" => Ok(arith::max(x, &args[1])),
        "min" => Ok(arith::min(x, &args[1])),
        "mod" => arith::modulo(ctx, x, &args[1]),
        "pow" => power(ctx, x, &args[1]),
        "root" => elem::root(ctx, x, small_int(ctx, &args[1])?),
        "sin" => elem::sin(ctx, x),
        "sinh" => elem::sinh(ctx, x),
        "sqrt" => elem::sqrt(ctx, x),
        "tan" => elem::tan(ctx, x),
        "tanh" => elem::tanh(ctx, x),
        "zeta" => special::zeta(ctx, small_int(ctx, x)?),
        _ => unreachable!("function table and dispatch disagree"),
    }
}

/// Evaluate an infix expression: numbers, `+ - * /`, `**` (or `^`, right
/// associative), parentheses, the names in [`CONSTANTS`] and calls to
/// [`FUNCTIONS`]. Each operation is rounded under the context's rule; decimal
/// literals are read exactly and rounded once.
pub fn evaluate(ctx: &Context, src: &str) -> Result<MpFloat> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(syntax("empty expression"));
    }
    let mut p = Parser { ctx, tokens, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(syntax(format!("trailing input at token {}", p.pos + 1)));
    }
    Ok(v)
}

/// The value in fixed form with `places` decimals, or in scientific form when
/// it is too large for that or below `10^-5` in magnitude.
pub fn render(ctx: &Context, x: &MpFloat, places: usize) -> Result<String> {
    let tiny = !x.is_zero() && arith::compare_magnitude(x, &convio::parse(&ctx.with_io_bases(10, 10)?, "1E-5")?).is_lt();
    if !tiny {
        match convio::format_fixed(ctx, x, places + 42, places as i64) {
            Ok(s) => return Ok(s.trim().to_string()),
            Err(MpError::Width) => {}
            Err(e) => return Err(e),
        }
    }
    let sig = (places + 1).clamp(2, convio::significant_places(ctx).max(2));
    convio::format_sci(ctx, x, sig)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Context {
        Context::init(40, 32).unwrap()
    }

    fn eval_text(src: &str, places: usize) -> String {
        let c = ctx();
        render(&c, &evaluate(&c, src).unwrap(), places).unwrap()
    }

    #[test]
    fn arithmetic_and_precedence() {
        assert_eq!(eval_text("0", 3), "0.000");
        assert_eq!(eval_text("1 + 2*3", 2), "7.00");
        assert_eq!(eval_text("(1 + 2)*3", 2), "9.00");
        assert_eq!(eval_text("2**3**2", 0), "512.");
        assert_eq!(eval_text("-2**2", 0), "-4.");
        assert_eq!(eval_text("2^-1", 2), "0.50");
        assert_eq!(eval_text("7/2 - 1", 1), "2.5");
        assert_eq!(eval_text("1e3 + .5", 1), "1000.5");
    }

    #[test]
    fn functions_and_constants() {
        assert_eq!(eval_text("16*atan1(5)-4*atan1(239)", 30), "3.141592653589793238462643383280");
        assert_eq!(eval_text("exp(ln(2))", 30), "2.000000000000000000000000000000");
        assert_eq!(eval_text("pi", 10), "3.1415926536");
        assert_eq!(eval_text("max(1, 2) + min(3, 4)", 0), "5.");
        assert_eq!(eval_text("zeta(2)*6/pi**2", 10), "1.0000000000");
        assert_eq!(eval_text("1e-30", 3), "1.000E-0030");
    }

    #[test]
    fn errors() {
        let c = ctx();
        for src in ["", "1 +", "(1", "foo(1)", "sin(1, 2)", "1 2", "$", "bar"] {
            assert!(evaluate(&c, src).is_err(), "{src}");
        }
        assert_eq!(evaluate(&c, "1/0"), Err(MpError::DivisionByZero));
    }
}
