use crate::perm::Permutation;

/// ASCII permutation diagram with the origin at the bottom left: column `i`
/// has an `o` in row `p(i)` and `.` elsewhere.
pub fn render_diagram(p: &Permutation) -> String {
    let n = p.len();
    let mut out = String::new();
    for row in (1..=n).rev() {
        let cells: Vec<&str> = (1..=n).map(|i| if p.at(i) == row { "o" } else { "." }).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_diagrams() {
        assert_eq!(render_diagram(&"12".parse().unwrap()), ". o\no .\n");
        assert_eq!(render_diagram(&Permutation::empty()), "");
        let drawn = "\
. . . o . .
. . o . . .
o . . . . .
. o . . . .
. . . . o .
. . . . . o
";
        assert_eq!(render_diagram(&"435621".parse().unwrap()), drawn);
    }
}
