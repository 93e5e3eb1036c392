//! Embedded vote data shared by the examples.

/// Eleven fictional legislators on a clean ideological staircase: member k
/// votes nay on the first k bills and yea on the rest, so the Hamming
/// distance between two members equals their distance along the spectrum.
/// Bill v11 is unanimous and v12 is all-abstain; both fall to the
/// near-unanimous filter.
pub const STAIRCASE_CSV: &str = "\
id,name,party,state,v1,v2,v3,v4,v5,v6,v7,v8,v9,v10,v11,v12
1,PAZ,D,OR,1,1,1,1,1,1,1,1,1,1,1,9
2,QUINN,D,WA,6,1,1,1,1,1,1,1,1,1,1,9
3,REESE,D,VT,6,6,1,1,1,1,1,1,1,1,1,9
4,SLOAN,D,MN,6,6,6,1,1,1,1,1,1,1,1,9
5,TATE,D,NM,6,6,6,6,1,1,1,1,1,1,1,9
6,UMBER,I,ME,6,6,6,6,6,1,1,1,1,1,1,9
7,VOSS,R,OH,6,6,6,6,6,6,1,1,1,1,1,9
8,WYATT,R,KS,6,6,6,6,6,6,6,1,1,1,1,9
9,XENAKIS,R,UT,6,6,6,6,6,6,6,6,1,1,1,9
10,YORK,R,TX,6,6,6,6,6,6,6,6,6,1,1,9
11,ZANE,R,WY,6,6,6,6,6,6,6,6,6,6,1,9
";
