use std::cmp::Ordering;
use std::collections::VecDeque;
use std::hash::{Hash, Hasher};

use super::{Cell, CycleReading, GeometryError, Interval, Isometry, PatternId, Vertex};

/// A finite edge-connected set of cells, translated so that the minimal x and
/// minimal y coordinates are both zero.
///
/// Equality, ordering and hashing only look at the cell set; the name is a label.
#[derive(Debug, Clone)]
pub struct Polyomino {
    cells: Vec<Cell>,
    name: Option<String>,
    width: u32,
    height: u32,
    occupied: Vec<bool>,
    // prefix[(y)*(width+1)+x] = number of cells with lower-left < (x, y)
    prefix: Vec<u32>,
}

/// The image of a polyomino under a grid isometry, with the translation that
/// brought it back into ℕ².
#[derive(Debug, Clone)]
pub struct Transported {
    pub polyomino: Polyomino,
    pub isometry: Isometry,
    shift: (i64, i64),
}

impl Transported {
    /// Image of a vertex of the source polyomino.
    pub fn vertex(&self, v: Vertex) -> Vertex {
        let (x, y) = self.isometry.apply(v.x as i64, v.y as i64);
        Vertex::new((x - self.shift.0) as u32, (y - self.shift.1) as u32)
    }
}

impl Polyomino {
    /// Checks connectivity and returns the canonical (translated) polyomino.
    pub fn validate(cells: impl IntoIterator<Item = Cell>) -> Result<Self, GeometryError> {
        Self::from_coords(cells.into_iter().map(|c| (c.x() as i64, c.y() as i64)))
    }

    /// Like [`Polyomino::validate`] but accepts arbitrary integer lower-left corners.
    pub fn from_coords(coords: impl IntoIterator<Item = (i64, i64)>) -> Result<Self, GeometryError> {
        let mut coords: Vec<(i64, i64)> = coords.into_iter().collect();
        if coords.is_empty() {
            return Err(GeometryError::Empty);
        }
        let min_x = coords.iter().map(|c| c.0).min().unwrap();
        let min_y = coords.iter().map(|c| c.1).min().unwrap();
        let mut cells = Vec::with_capacity(coords.len());
        for (x, y) in coords.drain(..) {
            let (x, y) = (x - min_x, y - min_y);
            if x > u32::MAX as i64 / 2 || y > u32::MAX as i64 / 2 {
                return Err(GeometryError::CoordinateOverflow);
            }
            cells.push(Cell::new(x as u32, y as u32));
        }
        cells.sort();
        cells.dedup();
        let p = Self::from_canonical(cells);
        if !p.is_connected() {
            return Err(GeometryError::NotConnected);
        }
        Ok(p)
    }

    fn from_canonical(cells: Vec<Cell>) -> Self {
        let width = cells.iter().map(|c| c.x() + 1).max().unwrap_or(0);
        let height = cells.iter().map(|c| c.y() + 1).max().unwrap_or(0);
        let (w, h) = (width as usize, height as usize);
        let mut occupied = vec![false; w * h];
        for c in &cells {
            occupied[c.y() as usize * w + c.x() as usize] = true;
        }
        let mut prefix = vec![0u32; (w + 1) * (h + 1)];
        for y in 0..h {
            for x in 0..w {
                prefix[(y + 1) * (w + 1) + x + 1] = occupied[y * w + x] as u32
                    + prefix[y * (w + 1) + x + 1]
                    + prefix[(y + 1) * (w + 1) + x]
                    - prefix[y * (w + 1) + x];
            }
        }
        Polyomino {
            cells,
            name: None,
            width,
            height,
            occupied,
            prefix,
        }
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.occupied.len()];
        let mut queue = VecDeque::from([self.cells[0]]);
        seen[self.slot(&self.cells[0])] = true;
        let mut count = 1;
        while let Some(c) = queue.pop_front() {
            for n in c.neighbors() {
                if self.contains(&n) && !seen[self.slot(&n)] {
                    seen[self.slot(&n)] = true;
                    count += 1;
                    queue.push_back(n);
                }
            }
        }
        count == self.cells.len()
    }

    fn slot(&self, c: &Cell) -> usize {
        c.y() as usize * self.width as usize + c.x() as usize
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Cells sorted by lower-left corner.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn rank(&self) -> usize {
        self.cells.len()
    }

    /// Bounding box width in cells.
    pub fn width(&self) -> u32 {
        self.width
    }

    /// Bounding box height in cells.
    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn contains(&self, c: &Cell) -> bool {
        c.x() < self.width && c.y() < self.height && self.occupied[self.slot(c)]
    }

    pub fn contains_at(&self, x: i64, y: i64) -> bool {
        x >= 0 && y >= 0 && self.contains(&Cell::new(x as u32, y as u32))
    }

    /// V(P), sorted by (x, y).
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        for x in 0..=self.width {
            for y in 0..=self.height {
                let v = Vertex::new(x, y);
                if self.has_vertex(v) {
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        let (x, y) = (v.x as i64, v.y as i64);
        self.contains_at(x, y)
            || self.contains_at(x - 1, y)
            || self.contains_at(x, y - 1)
            || self.contains_at(x - 1, y - 1)
    }

    /// Number of vertices of the bounding box `[(0,0), (width, height)]`.
    pub fn ambient_len(&self) -> usize {
        (self.width as usize + 1) * (self.height as usize + 1)
    }

    /// The one vertex indexing shared by lattice vectors and exponent vectors:
    /// row-major over `(x, y)` in the bounding box.
    pub fn ambient_index(&self, v: Vertex) -> Option<usize> {
        (v.x <= self.width && v.y <= self.height)
            .then(|| v.x as usize * (self.height as usize + 1) + v.y as usize)
    }

    pub fn ambient_vertex(&self, index: usize) -> Vertex {
        let h = self.height as usize + 1;
        Vertex::new((index / h) as u32, (index % h) as u32)
    }

    fn count_cells(&self, ll: Vertex, ur: Vertex) -> u32 {
        let w1 = self.width as usize + 1;
        let at = |x: u32, y: u32| self.prefix[y as usize * w1 + x as usize];
        at(ur.x, ur.y) + at(ll.x, ll.y) - at(ll.x, ur.y) - at(ur.x, ll.y)
    }

    /// True if the interval is proper and every one of its cells belongs to P.
    pub fn is_inner(&self, i: &Interval) -> bool {
        let (ll, ur) = i.diagonal_corners();
        i.is_proper()
            && ur.x <= self.width
            && ur.y <= self.height
            && self.count_cells(ll, ur) == i.length()
    }

    /// Inner interval given by raw corner coordinates; false when the corners do
    /// not describe a proper interval inside ℕ².
    pub fn is_inner_at(&self, x0: i64, y0: i64, x1: i64, y1: i64) -> bool {
        if x0 < 0 || y0 < 0 || x0 >= x1 || y0 >= y1 {
            return false;
        }
        if x1 > self.width as i64 || y1 > self.height as i64 {
            return false;
        }
        let ll = Vertex::new(x0 as u32, y0 as u32);
        let ur = Vertex::new(x1 as u32, y1 as u32);
        self.count_cells(ll, ur) as i64 == (x1 - x0) * (y1 - y0)
    }

    pub fn inner_intervals(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        for x0 in 0..self.width {
            for y0 in 0..self.height {
                if !self.contains(&Cell::new(x0, y0)) {
                    continue;
                }
                for x1 in x0 + 1..=self.width {
                    if !self.is_inner_at(x0 as i64, y0 as i64, x1 as i64, y0 as i64 + 1) {
                        break;
                    }
                    for y1 in y0 + 1..=self.height {
                        if !self.is_inner_at(x0 as i64, y0 as i64, x1 as i64, y1 as i64) {
                            break;
                        }
                        out.push(
                            Interval::new(Vertex::new(x0, y0), Vertex::new(x1, y1)).unwrap(),
                        );
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Inner intervals not contained in a larger inner interval.
    pub fn maximal_inner_intervals(&self) -> Vec<Interval> {
        self.inner_intervals()
            .into_iter()
            .filter(|i| {
                let (ll, ur) = i.diagonal_corners();
                let (x0, y0, x1, y1) = (ll.x as i64, ll.y as i64, ur.x as i64, ur.y as i64);
                !(self.is_inner_at(x0 - 1, y0, x1, y1)
                    || self.is_inner_at(x0, y0 - 1, x1, y1)
                    || self.is_inner_at(x0, y0, x1 + 1, y1)
                    || self.is_inner_at(x0, y0, x1, y1 + 1))
            })
            .collect()
    }

    /// Length of the maximal horizontal run of cells through `c` (0 if `c ∉ P`).
    pub fn horizontal_run(&self, c: &Cell) -> u32 {
        if !self.contains(c) {
            return 0;
        }
        let (x, y) = (c.x() as i64, c.y() as i64);
        let left = (1..).take_while(|d| self.contains_at(x - d, y)).count();
        let right = (1..).take_while(|d| self.contains_at(x + d, y)).count();
        (1 + left + right) as u32
    }

    pub fn vertical_run(&self, c: &Cell) -> u32 {
        if !self.contains(c) {
            return 0;
        }
        let (x, y) = (c.x() as i64, c.y() as i64);
        let down = (1..).take_while(|d| self.contains_at(x, y - d)).count();
        let up = (1..).take_while(|d| self.contains_at(x, y + d)).count();
        (1 + down + up) as u32
    }

    /// Bounded components of the complement, as cell sets in P's coordinates.
    pub fn hole_cells(&self) -> Vec<Vec<Cell>> {
        // Flood the complement in the box padded by one ring; whatever the
        // flood from the pad cannot reach is a hole.
        let (w, h) = (self.width as i64 + 2, self.height as i64 + 2);
        let idx = |x: i64, y: i64| ((y + 1) * w + (x + 1)) as usize;
        let mut label = vec![0u32; (w * h) as usize];
        let mut components: Vec<Vec<Cell>> = Vec::new();
        let flood = |sx: i64, sy: i64, id: u32, label: &mut Vec<u32>| -> Vec<(i64, i64)> {
            let mut found = vec![(sx, sy)];
            let mut queue = VecDeque::from([(sx, sy)]);
            label[idx(sx, sy)] = id;
            while let Some((x, y)) = queue.pop_front() {
                for (nx, ny) in [(x - 1, y), (x + 1, y), (x, y - 1), (x, y + 1)] {
                    if nx < -1 || ny < -1 || nx > w - 2 || ny > h - 2 {
                        continue;
                    }
                    if label[idx(nx, ny)] != 0 || self.contains_at(nx, ny) {
                        continue;
                    }
                    label[idx(nx, ny)] = id;
                    found.push((nx, ny));
                    queue.push_back((nx, ny));
                }
            }
            found
        };
        flood(-1, -1, 1, &mut label);
        let mut next = 2;
        for y in 0..self.height as i64 {
            for x in 0..self.width as i64 {
                if label[idx(x, y)] == 0 && !self.contains_at(x, y) {
                    let mut comp: Vec<Cell> = flood(x, y, next, &mut label)
                        .into_iter()
                        .map(|(x, y)| Cell::new(x as u32, y as u32))
                        .collect();
                    comp.sort();
                    components.push(comp);
                    next += 1;
                }
            }
        }
        components
    }

    /// Holes as canonical polyominoes.
    pub fn holes(&self) -> Vec<Polyomino> {
        self.hole_cells()
            .into_iter()
            .map(|cells| Polyomino::validate(cells).expect("hole components are connected"))
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.hole_cells().is_empty()
    }

    /// Translations at which the pattern matches.
    pub fn pattern_matches(&self, id: PatternId) -> Vec<Vertex> {
        let pattern = id.pattern();
        let mut out = Vec::new();
        for ty in 0..self.height as i64 {
            for tx in 0..self.width as i64 {
                let present = pattern
                    .present
                    .iter()
                    .all(|&(dx, dy)| self.contains_at(tx + dx as i64, ty + dy as i64));
                let absent = pattern
                    .absent
                    .iter()
                    .all(|&(dx, dy)| !self.contains_at(tx + dx as i64, ty + dy as i64));
                if present && absent {
                    out.push(Vertex::new(tx as u32, ty as u32));
                }
            }
        }
        out
    }

    pub fn contains_pattern(&self, id: PatternId) -> bool {
        !self.pattern_matches(id).is_empty()
    }

    /// No 2×2 block of cells.
    pub fn is_thin(&self) -> bool {
        !self.contains_pattern(PatternId::Q)
    }

    pub fn is_thin_cycle(&self) -> bool {
        self.is_thin_cycle_with(CycleReading::Cyclic)
    }

    pub fn is_thin_cycle_with(&self, reading: CycleReading) -> bool {
        super::cycle::is_thin_cycle(self, reading)
    }

    /// Image under a grid isometry, re-translated into ℕ².
    pub fn transform(&self, isometry: Isometry) -> Transported {
        let images: Vec<(i64, i64)> = self
            .cells
            .iter()
            .map(|c| {
                let (x, y) = (c.x() as i64, c.y() as i64);
                let corners = [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)]
                    .map(|(a, b)| isometry.apply(a, b));
                (
                    corners.iter().map(|c| c.0).min().unwrap(),
                    corners.iter().map(|c| c.1).min().unwrap(),
                )
            })
            .collect();
        let shift = (
            images.iter().map(|c| c.0).min().unwrap(),
            images.iter().map(|c| c.1).min().unwrap(),
        );
        let mut polyomino = Polyomino::from_coords(images).expect("isometries preserve connectivity");
        polyomino.name = self.name.clone();
        Transported {
            polyomino,
            isometry,
            shift,
        }
    }
}

impl PartialEq for Polyomino {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for Polyomino {}

impl Hash for Polyomino {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.cells.hash(state);
    }
}

impl PartialOrd for Polyomino {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polyomino {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cells
            .len()
            .cmp(&other.cells.len())
            .then_with(|| self.cells.cmp(&other.cells))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coords: &[(u32, u32)]) -> Polyomino {
        Polyomino::validate(coords.iter().map(|&(x, y)| Cell::new(x, y))).unwrap()
    }

    fn annulus() -> Polyomino {
        poly(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2)])
    }

    const FIG8A: [(u32, u32); 14] = [
        (0, 0), (0, 1), (0, 2), (1, 0), (2, 0), (3, 0), (4, 0),
        (4, 1), (4, 2), (1, 2), (1, 3), (2, 3), (3, 3), (3, 2),
    ];

    /// Brute force: every proper sub-interval of the bounding box whose cells
    /// are all present.
    fn brute_inner(p: &Polyomino) -> Vec<Interval> {
        let mut out = Vec::new();
        for x0 in 0..=p.width() {
            for x1 in x0 + 1..=p.width() {
                for y0 in 0..=p.height() {
                    for y1 in y0 + 1..=p.height() {
                        let i = Interval::new(Vertex::new(x0, y0), Vertex::new(x1, y1)).unwrap();
                        if i.cells().all(|c| p.contains(&c)) {
                            out.push(i);
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn validate_examples() {
        assert_eq!(poly(&[(0, 0)]).rank(), 1);
        let err = Polyomino::validate([Cell::new(0, 0), Cell::new(2, 0)]).unwrap_err();
        assert_eq!(err, GeometryError::NotConnected);
        assert_eq!(Polyomino::validate([]).unwrap_err(), GeometryError::Empty);
        assert_eq!(poly(&FIG8A).rank(), 14);
    }

    #[test]
    fn validate_translates_to_origin() {
        let p = Polyomino::from_coords([(5, 7), (6, 7)]).unwrap();
        assert_eq!(p.cells(), &[Cell::new(0, 0), Cell::new(1, 0)]);
        assert_eq!(p, poly(&[(0, 0), (1, 0)]));
    }

    #[test]
    fn inner_interval_counts() {
        assert_eq!(poly(&[(0, 0)]).inner_intervals().len(), 1);
        let block = poly(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        assert_eq!(brute_inner(&block).len(), 9);
        assert_eq!(block.inner_intervals(), brute_inner(&block));
        let domino = poly(&[(0, 0), (1, 0)]);
        assert_eq!(domino.inner_intervals().len(), 3);
        for p in [annulus(), poly(&FIG8A)] {
            assert_eq!(p.inner_intervals(), brute_inner(&p));
        }
    }

    #[test]
    fn maximal_inner_interval_examples() {
        let bar = poly(&[(0, 0), (1, 0), (2, 0)]);
        let max = bar.maximal_inner_intervals();
        assert_eq!(max.len(), 1);
        assert_eq!(max[0].length(), 3);

        let max = annulus().maximal_inner_intervals();
        assert_eq!(max.len(), 4);
        assert!(max.iter().all(|i| i.length() == 3));

        let column = Interval::new(Vertex::new(1, 2), Vertex::new(2, 4)).unwrap();
        assert!(poly(&FIG8A).maximal_inner_intervals().contains(&column));
    }

    #[test]
    fn hole_examples() {
        assert!(poly(&[(0, 0), (1, 0), (0, 1)]).holes().is_empty());
        let holes = annulus().holes();
        assert_eq!(holes.len(), 1);
        assert_eq!(holes[0].rank(), 1);
        assert!(poly(&FIG8A).holes().len() == 1);
    }

    #[test]
    fn thinness() {
        assert!(!poly(&[(0, 0), (1, 0), (0, 1), (1, 1)]).is_thin());
        assert!(poly(&[(0, 0), (1, 0), (1, 1)]).is_thin());
        assert!(annulus().is_thin());
    }

    #[test]
    fn pattern_examples() {
        let stair = poly(&[(0, 0), (1, 0), (1, 1), (2, 1)]);
        assert!(stair.contains_pattern(PatternId::SkewI));
        assert!(!annulus().contains_pattern(PatternId::DiagNe));
        assert!(!annulus().contains_pattern(PatternId::DiagNw));
        let a = poly(&FIG8A);
        assert!([PatternId::SkewI, PatternId::SkewII, PatternId::SkewIII, PatternId::SkewIV]
            .into_iter()
            .any(|id| a.contains_pattern(id)));
    }

    #[test]
    fn diag_pattern_needs_missing_cells() {
        // E=(0,0), F=(1,1) joined through C=(0,1).
        let p = poly(&[(0, 0), (0, 1), (1, 1)]);
        assert!(!p.contains_pattern(PatternId::DiagNe));
        let p = poly(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (2, 2), (1, 2)]);
        assert_eq!(p.pattern_matches(PatternId::DiagNe), vec![Vertex::new(0, 1)]);
    }

    #[test]
    fn transform_round_trip() {
        let a = poly(&FIG8A);
        for iso in Isometry::ALL {
            let t = a.transform(iso);
            assert_eq!(t.polyomino.rank(), a.rank());
            let back = t.polyomino.transform(iso.inverse());
            assert_eq!(back.polyomino, a);
            for v in a.vertices() {
                assert!(t.polyomino.has_vertex(t.vertex(v)));
                assert_eq!(back.vertex(t.vertex(v)), v);
            }
        }
    }

    #[test]
    fn ambient_index_is_a_bijection() {
        let a = poly(&FIG8A);
        for i in 0..a.ambient_len() {
            assert_eq!(a.ambient_index(a.ambient_vertex(i)), Some(i));
        }
    }

    #[test]
    fn runs() {
        let a = annulus();
        assert_eq!(a.horizontal_run(&Cell::new(1, 0)), 3);
        assert_eq!(a.vertical_run(&Cell::new(1, 0)), 1);
        assert_eq!(a.vertical_run(&Cell::new(0, 0)), 3);
    }
}
