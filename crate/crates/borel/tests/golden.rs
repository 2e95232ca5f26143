use borel::cli::{f4_table_csv, run};

#[test]
fn f4_table_csv_matches_golden_file() {
    let golden = include_str!("golden/f4_table.csv");
    assert_eq!(f4_table_csv(), golden);
    let mut out = Vec::new();
    let code = run(["borel", "reproduce", "f4-table", "--format", "csv"], &mut out, &mut Vec::new());
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), golden);
}
