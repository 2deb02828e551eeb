class Stats {
    int classify(int value) {
        switch (value) {
            case 0:
                return 0;
            case 1:
                return 1;
            default:
                return 2;
        }
    }

    int sum(int[] numbers) {
        int total = 0;
        for (int i = 0; i < numbers.length; i++) {
            total = total + numbers[i];
        }
        return total;
    }

    int max(int[] numbers) {
        int best = numbers[0];
        for (int i = 1; i < numbers.length; i++) {
            if (numbers[i] > best) {
                best = numbers[i];
            }
        }
        return best;
    }

    double mean(int[] numbers) {
        if (numbers.length == 0) {
            return 0.0;
        }
        return (double) sum(numbers) / numbers.length;
    }
}
