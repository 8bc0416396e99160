use std::fmt::Write as _;
use std::path::Path;

/// A gnuplot script that renders `csv` to `<csv>.png`.
///
/// `x` and `y` are 1-based column numbers; with `y` set the plot is a
/// coloured scatter of `value` over the `(x, y)` plane.
pub fn gnuplot_script(
    csv: &Path,
    title: &str,
    x: (usize, &str),
    y: Option<(usize, &str)>,
    value: (usize, &str),
) -> String {
    let name = csv
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let mut s = String::new();
    let _ = writeln!(s, "set datafile separator ','");
    let _ = writeln!(s, "set datafile commentschars '#'");
    let _ = writeln!(s, "set terminal pngcairo size 900,600");
    let _ = writeln!(s, "set output '{name}.png'");
    let _ = writeln!(s, "set title '{title}'");
    let _ = writeln!(s, "set xlabel '{}'", x.1);
    match y {
        None => {
            let _ = writeln!(s, "set ylabel '{}'", value.1);
            let _ = writeln!(s, "set grid");
            let _ = writeln!(
                s,
                "plot '{name}' every ::1 using {}:{} with lines notitle",
                x.0, value.0
            );
        }
        Some((col, label)) => {
            let _ = writeln!(s, "set ylabel '{label}'");
            let _ = writeln!(s, "set cblabel '{}'", value.1);
            let _ = writeln!(s, "set palette rgb 33,13,10");
            let _ = writeln!(
                s,
                "plot '{name}' every ::1 using {}:{col}:{} with points pointtype 5 pointsize 0.4 palette notitle",
                x.0, value.0
            );
        }
    }
    s
}
