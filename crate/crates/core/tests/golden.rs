use infinity_series::analysis::{case_table, CaseLabel};

const TABLE: &str = include_str!("golden/table1.txt");

#[test]
fn case_table_matches_golden_text() {
    let grid = case_table(-10..=11, -12..=11).unwrap();
    assert_eq!(grid.to_text(), TABLE);
}

#[test]
fn golden_cells_parse_back() {
    let mut lines = TABLE.lines();
    let header: Vec<i64> = lines
        .next()
        .unwrap()
        .split_whitespace()
        .skip(1)
        .map(|j| j.parse().unwrap())
        .collect();
    assert_eq!(header, (-12..=11).collect::<Vec<_>>());
    let grid = case_table(-10..=11, -12..=11).unwrap();
    for line in lines {
        let mut cells = line.split_whitespace();
        let i: i64 = cells.next().unwrap().parse().unwrap();
        for (j, symbol) in header.iter().zip(cells) {
            let label = CaseLabel::from_symbol(symbol).unwrap();
            assert_eq!(grid.get(i, *j), Some(label), "({i}, {j})");
        }
    }
}
