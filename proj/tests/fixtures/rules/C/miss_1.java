class Balanced {
    int sum(int[][] grid) {
        int total = 0;
        for (int r = 0; r < grid.length; r++) {
            total = total + grid[r][0];
        }
        return total;
    }
}
